#pragma once

#include "h8mp/field.hpp"

namespace h8mp {

// Scalar ring abstraction so the Hopf kernels run both on concrete field
// elements and on polynomials in unknowns.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<FieldElement> {
  static FieldElement zero() { return FieldElement(); }
  static FieldElement lift(const FieldElement& c) { return c; }
  static bool is_zero(const FieldElement& s) { return s.is_zero(); }
  static void axpy(FieldElement& acc, const FieldElement& x, const FieldElement& c) {
    acc += x * c;
  }
};

}  // namespace h8mp
