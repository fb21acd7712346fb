#include "webiso/rational.hpp"

#include <algorithm>
#include <cctype>

#include "webiso/error.hpp"

namespace webiso {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw Error("empty rational literal");
  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw Error("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer p(num), q(den);
  if (q == 0) throw Error("zero denominator in rational literal '" + s + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::size_t bit_size(const Rational& q) {
  return std::max(mpz_sizeinbase(q.get_num_mpz_t(), 2), mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    return rational_pow(Rational(1) / base, -exponent);
  }
  Rational result(1), b(base);
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e) {
    if (e & 1UL) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

Point parse_point(const std::vector<std::string>& coords) {
  Point p;
  p.reserve(coords.size());
  for (const auto& c : coords) p.push_back(parse_rational(c));
  return p;
}

}  // namespace webiso
