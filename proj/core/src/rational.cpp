#include "goldie/rational.hpp"

namespace goldie {

Rational parse_rational(const std::string& s) {
  auto bad = [&]() -> std::invalid_argument {
    return std::invalid_argument("parse_rational: malformed rational '" + s + "'");
  };
  auto parse_int = [&](const std::string& t) -> Integer {
    if (t.empty()) throw bad();
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw bad();
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw bad();
    return Integer(t);
  };
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  Integer num = parse_int(s.substr(0, slash));
  Integer den = parse_int(s.substr(slash + 1));
  if (den == 0) throw bad();
  return Rational(num, den);
}

}  // namespace goldie
