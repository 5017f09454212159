#pragma once

#include <string>

#include "srk/mobius.hpp"
#include "srk/star_series.hpp"

namespace srk {

/// Series literal: a JSON array of quaternion strings, where the index
/// is the power of q. Throws ParseError on malformed input.
StarSeries parse_series(const std::string& text);
std::string serialize_series(const StarSeries& f);

/// Quotient literal: {"side": "left"|"right", "denom": <series>,
/// "numer": <series>}.
RegularQuotient parse_quotient(const std::string& text);
std::string serialize_quotient(const RegularQuotient& Q);

/// Matrix literal: a JSON 2x2 array [[a, c], [b, d]] of quaternion
/// strings, rows first.
QuatMatrix2 parse_matrix(const std::string& text);
std::string serialize_matrix(const QuatMatrix2& A);

/// Accepts either a series literal or a quotient literal.
RegularQuotient parse_function(const std::string& text);

}  // namespace srk
