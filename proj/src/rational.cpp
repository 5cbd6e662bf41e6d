#include "h8mp/rational.hpp"

#include <cctype>

namespace h8mp {

Rational parse_rational(std::string_view s) {
  auto bad = [&] { throw ParseError("invalid rational '" + std::string(s) + "'"); };
  if (s.empty()) bad();
  std::string num, den;
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(s);
    den = "1";
  } else {
    num = std::string(s.substr(0, slash));
    den = std::string(s.substr(slash + 1));
  }
  auto check = [&](const std::string& t, bool sign_ok) {
    if (t.empty()) bad();
    size_t i = (sign_ok && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) bad();
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) bad();
  };
  check(num, true);
  check(den, false);
  Int d(den);
  if (d == 0) bad();
  return Rational(Int(num), d);
}

bool integer_sqrt(const Int& n, Int& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

bool rational_sqrt(const Rational& r, Rational& root) {
  if (r < 0) return false;
  Int sn, sd;
  if (!integer_sqrt(numerator(r), sn)) return false;
  if (!integer_sqrt(denominator(r), sd)) return false;
  root = Rational(sn, sd);
  return true;
}

}  // namespace h8mp
