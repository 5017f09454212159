#include "srk/quaternion.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>

namespace srk {

Quaternion qinv(const Quaternion& q) {
  const double n2 = norm_sq(q);
  if (std::sqrt(n2) <= tol::kZeroInversion) {
    throw ZeroDivision("cannot invert quaternion with norm " +
                       format_real(std::sqrt(n2)));
  }
  return conj(q) / n2;
}

Quaternion unit(const Quaternion& q) {
  const double n = norm(q);
  if (n <= tol::kZeroInversion) {
    throw ZeroDivision("cannot normalize quaternion with norm " +
                       format_real(n));
  }
  return q / n;
}

SliceCoordinates slice_decompose(const Quaternion& q) {
  const double y = imag_norm(q);
  if (y <= tol::kRealPoint) {
    throw RealPoint("slice axis undefined at real point " + to_string(q));
  }
  return {q.w, y, imag(q) / y};
}

bool same_slice(const Quaternion& a, const Quaternion& b, double tolerance) {
  const double ya = imag_norm(a);
  const double yb = imag_norm(b);
  if (ya <= tolerance || yb <= tolerance) return true;
  const Quaternion u = imag(a) / ya;
  const Quaternion v = imag(b) / yb;
  return norm(u - v) <= tolerance || norm(u + v) <= tolerance;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void append_component(std::string& out, double v, char unit) {
  std::string s = format_real(v);
  if (s.front() != '-') out += '+';
  out += s;
  out += unit;
}

}  // namespace

std::string to_string(const Quaternion& q) {
  std::string out = format_real(q.w);
  append_component(out, q.x, 'i');
  append_component(out, q.y, 'j');
  append_component(out, q.z, 'k');
  return out;
}

namespace {

void skip_spaces(std::string_view s, size_t& pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
}

}  // namespace

Quaternion parse_quaternion(std::string_view text) {
  Quaternion q;
  bool seen[4] = {false, false, false, false};
  const auto store = [&](int slot, double* component, double value) {
    // Assign on first sight so a signed zero survives the round trip.
    if (seen[slot]) {
      *component += value;
    } else {
      *component = value;
      seen[slot] = true;
    }
  };
  size_t pos = 0;
  bool first = true;
  skip_spaces(text, pos);
  if (pos == text.size()) {
    throw ParseError("empty quaternion literal");
  }
  while (pos < text.size()) {
    double sign = 1.0;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1.0;
      ++pos;
      skip_spaces(text, pos);
    } else if (!first) {
      throw ParseError("expected '+' or '-' between components in \"" +
                       std::string(text) + "\"");
    }
    double value = 1.0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    const bool has_number = ec == std::errc() && ptr != begin;
    if (has_number) {
      pos += static_cast<size_t>(ptr - begin);
    }
    skip_spaces(text, pos);
    char unit = '\0';
    if (pos < text.size() &&
        (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
      unit = text[pos];
      ++pos;
    }
    if (!has_number && unit == '\0') {
      throw ParseError("expected component at position " +
                       std::to_string(pos) + " in \"" + std::string(text) +
                       "\"");
    }
    value = sign < 0.0 ? -value : value;
    switch (unit) {
      case '\0':
        store(0, &q.w, value);
        break;
      case 'i':
        store(1, &q.x, value);
        break;
      case 'j':
        store(2, &q.y, value);
        break;
      case 'k':
        store(3, &q.z, value);
        break;
    }
    skip_spaces(text, pos);
    first = false;
  }
  return q;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << to_string(q);
}

}  // namespace srk
