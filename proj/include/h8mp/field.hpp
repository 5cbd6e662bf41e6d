#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "h8mp/rational.hpp"

namespace h8mp {

// Element of Q(zeta_8) = Q[w]/(w^4 + 1), stored as c0 + c1*w + c2*w^2 + c3*w^3.
// w^2 plays the role of sqrt(-1) and w - w^3 the role of sqrt(2).
// The representation is unique, so equality is coefficientwise.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(Rational c0) { c_[0] = std::move(c0); }
  FieldElement(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static FieldElement from_int(long n) { return FieldElement(Rational(n)); }
  static FieldElement zero() { return FieldElement(); }
  static FieldElement one() { return from_int(1); }
  static FieldElement half() { return FieldElement(Rational(1, 2)); }
  // w^k for any integer k (reduced mod w^4 = -1).
  static FieldElement zeta(int k = 1);
  static FieldElement i() { return zeta(2); }
  static FieldElement sqrt2() { return zeta(1) - zeta(3); }

  const Rational& coeff(int k) const { return c_[k]; }
  Rational& coeff(int k) { return c_[k]; }

  bool is_zero() const;
  bool is_one() const { return *this == one(); }
  bool is_rational() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) {
    for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
  }
  FieldElement& operator-=(const FieldElement& o) {
    for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  bool operator==(const FieldElement& o) const {
    for (int k = 0; k < 4; ++k)
      if (rational_cmp_raw(c_[k], o.c_[k]) != 0) return false;
    return true;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  // Arbitrary but total and stable order; used for canonical containers.
  // Compares numerator/denominator pairs instead of rational values, which
  // avoids the expensive value comparison.
  bool operator<(const FieldElement& o) const {
    for (int k = 0; k < 4; ++k) {
      int c = rational_cmp_raw(c_[k], o.c_[k]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  // Multiplicative inverse via the product of Galois conjugates. Throws ZeroInverse.
  FieldElement inv() const;

  // Galois automorphism w -> w^k for odd k.
  FieldElement galois(int k) const;

  // All square roots lying in the field itself: empty, or {r, -r} (or {0}).
  std::vector<FieldElement> sqrt() const;

  std::string str() const;  // debug form, e.g. "1/2+1/2*w^2"

 private:
  std::array<Rational, 4> c_{};
};

inline FieldElement operator*(const Rational& r, const FieldElement& a) {
  return FieldElement(r) * a;
}

}  // namespace h8mp
