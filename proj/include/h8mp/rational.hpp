#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "h8mp/errors.hpp"

namespace h8mp {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1, den > 0.
// cpp_rational maintains the canonical form on every operation.
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// Structural comparison on the canonical (numerator, denominator) pair; much
// cheaper than the value comparison and equivalent for equality testing.
inline int rational_cmp_raw(const Rational& a, const Rational& b) {
  const auto& ra = a.backend().data();
  const auto& rb = b.backend().data();
  int c = ra.numerator().compare(rb.numerator());
  if (c) return c;
  return ra.denominator().compare(rb.denominator());
}

inline bool rational_is_zero(const Rational& r) {
  return r.backend().data().numerator().is_zero();
}

Rational parse_rational(std::string_view s);

// Floor square root test: returns true and sets root if n is a perfect square.
bool integer_sqrt(const Int& n, Int& root);

// Exact square root of a nonnegative rational, if one exists in Q.
bool rational_sqrt(const Rational& r, Rational& root);

}  // namespace h8mp
