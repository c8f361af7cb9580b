#include "horncone/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace horncone {

std::string to_string(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den[0] == '-')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  const Integer d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

RationalVector primitive(const RationalVector& v) {
  Integer lcm_den = 1;
  for (const auto& x : v) lcm_den = lcm(lcm_den, denominator(x));
  Integer content = 0;
  for (const auto& x : v) content = gcd(content, numerator(x) * (lcm_den / denominator(x)));
  if (content == 0) return v;
  RationalVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out[i] = Rational(numerator(v[i]) * (lcm_den / denominator(v[i])) / content);
  return out;
}

}  // namespace horncone
