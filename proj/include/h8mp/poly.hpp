#pragma once

#include <boost/container/small_vector.hpp>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "h8mp/field.hpp"
#include "h8mp/scalar.hpp"

namespace h8mp {

// Power product of variables, packed into one 64-bit key: the top byte holds
// the total degree, the lower seven bytes the variable letters (var index + 1)
// sorted descending. Supports up to 7 letters and 127 variables, far beyond
// what these systems produce; the key order is a graded order.
struct Monomial {
  std::uint64_t key = 0;

  static Monomial one() { return {}; }
  static Monomial var(int v) {
    Monomial m;
    m.key = (std::uint64_t{1} << 56) | (std::uint64_t(v + 1) << 48);
    return m;
  }

  int degree() const { return static_cast<int>(key >> 56); }
  bool is_one() const { return key == 0; }

  // Letters, most significant first.
  int letter(int k) const { return static_cast<int>((key >> (48 - 8 * k)) & 0xff); }

  bool contains(int v) const {
    for (int k = 0; k < degree(); ++k)
      if (letter(k) == v + 1) return true;
    return false;
  }

  // Decoded (variable, exponent) pairs, ascending by variable.
  boost::container::small_vector<std::pair<int, int>, 4> factors() const;

  Monomial operator*(const Monomial& o) const;
  // Divide by one power of variable v (v must occur).
  Monomial div_var(int v) const;

  bool operator==(const Monomial& o) const { return key == o.key; }
  bool operator<(const Monomial& o) const { return key < o.key; }
  bool operator>(const Monomial& o) const { return key > o.key; }
};

// Multivariate polynomial over the field in canonical form: strictly
// increasing monomials, no zero coefficients.
class Poly {
 public:
  using Term = std::pair<Monomial, FieldElement>;
  using Terms = std::vector<Term>;

  Poly() = default;
  static Poly constant(const FieldElement& c);
  static Poly variable(int v);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.front().first.is_one());
  }
  FieldElement constant_value() const {
    if (t_.empty()) return FieldElement();
    return t_.front().second;
  }
  int degree() const { return t_.empty() ? 0 : t_.back().first.degree(); }
  size_t term_count() const { return t_.size(); }
  const Terms& terms() const { return t_; }

  std::set<int> vars() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const FieldElement& c) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) {
    add_scaled(o, FieldElement::one());
    return *this;
  }
  Poly& operator-=(const Poly& o);

  // this += p * c, merged in place in one pass.
  void add_scaled(const Poly& p, const FieldElement& c);

  bool operator==(const Poly& o) const { return t_ == o.t_; }
  bool operator<(const Poly& o) const { return t_ < o.t_; }

  // Replace every occurrence of variable v by the polynomial repl.
  Poly substitute(int v, const Poly& repl) const;

  FieldElement eval(const std::map<int, FieldElement>& assignment) const;

  // Leading (largest) monomial and its coefficient.
  const Monomial& leading_monomial() const { return t_.back().first; }
  const FieldElement& leading_coeff() const { return t_.back().second; }
  Poly monic() const;

  // Homogeneous degree-d part.
  Poly homogeneous_part(int d) const;

  void add_term(const Monomial& m, const FieldElement& c);

  std::string str(const std::vector<std::string>& names) const;

 private:
  Terms t_;
};

template <>
struct ScalarTraits<Poly> {
  static Poly zero() { return Poly(); }
  static Poly lift(const FieldElement& c) { return Poly::constant(c); }
  static bool is_zero(const Poly& s) { return s.is_zero(); }
  static void axpy(Poly& acc, const Poly& x, const FieldElement& c) { acc.add_scaled(x, c); }
};

}  // namespace h8mp
