#include "srk/serialization.hpp"

#include <nlohmann/json.hpp>

namespace srk {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError("malformed JSON literal");
  }
  return j;
}

StarSeries series_from_json(const json& j) {
  if (!j.is_array()) {
    throw ParseError("series literal must be a JSON array");
  }
  std::vector<Quaternion> coeffs;
  coeffs.reserve(j.size());
  for (const json& entry : j) {
    if (!entry.is_string()) {
      throw ParseError("series coefficients must be quaternion strings");
    }
    coeffs.push_back(parse_quaternion(entry.get<std::string>()));
  }
  return StarSeries(std::move(coeffs));
}

json series_to_json(const StarSeries& f) {
  json j = json::array();
  for (const Quaternion& c : f.coeffs()) {
    j.push_back(to_string(c));
  }
  return j;
}

RegularQuotient quotient_from_json(const json& j) {
  if (!j.is_object()) {
    throw ParseError("quotient literal must be a JSON object");
  }
  if (!j.contains("side") || !j.contains("denom") || !j.contains("numer")) {
    throw ParseError("quotient literal needs side, denom and numer fields");
  }
  const std::string side_name = j.at("side").get<std::string>();
  QuotientSide side;
  if (side_name == "left") {
    side = QuotientSide::left;
  } else if (side_name == "right") {
    side = QuotientSide::right;
  } else {
    throw ParseError("quotient side must be \"left\" or \"right\"");
  }
  return RegularQuotient(side, series_from_json(j.at("denom")),
                         series_from_json(j.at("numer")));
}

}  // namespace

StarSeries parse_series(const std::string& text) {
  return series_from_json(parse_json(text));
}

std::string serialize_series(const StarSeries& f) {
  return series_to_json(f).dump();
}

RegularQuotient parse_quotient(const std::string& text) {
  return quotient_from_json(parse_json(text));
}

std::string serialize_quotient(const RegularQuotient& Q) {
  nlohmann::ordered_json j;
  j["side"] = Q.side() == QuotientSide::left ? "left" : "right";
  j["denom"] = series_to_json(Q.denom());
  j["numer"] = series_to_json(Q.numer());
  return j.dump();
}

QuatMatrix2 parse_matrix(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() ||
      !j[1].is_array() || j[0].size() != 2 || j[1].size() != 2) {
    throw ParseError("matrix literal must be a 2x2 JSON array");
  }
  const auto entry = [&](int row, int col) {
    const json& e = j[static_cast<size_t>(row)][static_cast<size_t>(col)];
    if (!e.is_string()) {
      throw ParseError("matrix entries must be quaternion strings");
    }
    return parse_quaternion(e.get<std::string>());
  };
  return {entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)};
}

std::string serialize_matrix(const QuatMatrix2& A) {
  json j = json::array();
  j.push_back(json::array({to_string(A.a), to_string(A.c)}));
  j.push_back(json::array({to_string(A.b), to_string(A.d)}));
  return j.dump();
}

RegularQuotient parse_function(const std::string& text) {
  const json j = parse_json(text);
  if (j.is_array()) {
    return RegularQuotient::from_series(series_from_json(j));
  }
  if (j.is_object()) {
    return quotient_from_json(j);
  }
  throw ParseError("function literal must be a series array or a quotient");
}

}  // namespace srk
