#pragma once

#include <string>
#include <vector>

#include "h8mp/errors.hpp"
#include "h8mp/field.hpp"
#include "h8mp/report.hpp"
#include "h8mp/scalar.hpp"

namespace h8mp {

template <class S>
using Coords = std::vector<S>;

// Element of the algebra as a coordinate vector over the fixed ordered basis.
using Elt = Coords<FieldElement>;

// Finite-dimensional Hopf algebra by structure constants.
struct HopfData {
  int dim = 0;
  std::vector<std::string> basis_names;
  std::vector<std::vector<Elt>> mult;  // [i][j] -> coordinates of e_i * e_j
  Elt unit;
  std::vector<Elt> comult;  // [i] -> n^2 coordinates over e_j (x) e_k, slot j*n+k
  Elt counit;               // counit(e_i)
  std::vector<Elt> antipode;  // [i] -> coordinates of S(e_i)

  int index_of(const std::string& name) const;
  Elt basis_elt(int i) const {
    Elt e(dim);
    e[i] = FieldElement::one();
    return e;
  }
};

template <class S>
void check_dim(const HopfData& H, const Coords<S>& x, const char* where) {
  if (static_cast<int>(x.size()) != H.dim) throw DimensionMismatch(where);
}

// Bilinear extension of the multiplication table.
template <class S>
Coords<S> hopf_multiply(const HopfData& H, const Coords<S>& x, const Coords<S>& y) {
  check_dim(H, x, "multiply lhs");
  check_dim(H, y, "multiply rhs");
  Coords<S> r(H.dim, ScalarTraits<S>::zero());
  for (int i = 0; i < H.dim; ++i) {
    if (ScalarTraits<S>::is_zero(x[i])) continue;
    for (int j = 0; j < H.dim; ++j) {
      if (ScalarTraits<S>::is_zero(y[j])) continue;
      S prod = x[i] * y[j];
      const Elt& row = H.mult[i][j];
      for (int k = 0; k < H.dim; ++k) {
        if (row[k].is_zero()) continue;
        ScalarTraits<S>::axpy(r[k], prod, row[k]);
      }
    }
  }
  return r;
}

// Linear extension of the comultiplication; returns an n^2 vector.
template <class S>
Coords<S> hopf_comultiply(const HopfData& H, const Coords<S>& x) {
  check_dim(H, x, "comultiply");
  int n2 = H.dim * H.dim;
  Coords<S> r(n2, ScalarTraits<S>::zero());
  for (int i = 0; i < H.dim; ++i) {
    if (ScalarTraits<S>::is_zero(x[i])) continue;
    for (int t = 0; t < n2; ++t) {
      if (H.comult[i][t].is_zero()) continue;
      ScalarTraits<S>::axpy(r[t], x[i], H.comult[i][t]);
    }
  }
  return r;
}

template <class S>
S hopf_counit(const HopfData& H, const Coords<S>& x) {
  check_dim(H, x, "counit");
  S r = ScalarTraits<S>::zero();
  for (int i = 0; i < H.dim; ++i) {
    if (ScalarTraits<S>::is_zero(x[i]) || H.counit[i].is_zero()) continue;
    ScalarTraits<S>::axpy(r, x[i], H.counit[i]);
  }
  return r;
}

template <class S>
Coords<S> hopf_antipode(const HopfData& H, const Coords<S>& x) {
  check_dim(H, x, "antipode");
  Coords<S> r(H.dim, ScalarTraits<S>::zero());
  for (int i = 0; i < H.dim; ++i) {
    if (ScalarTraits<S>::is_zero(x[i])) continue;
    for (int k = 0; k < H.dim; ++k) {
      if (H.antipode[i][k].is_zero()) continue;
      ScalarTraits<S>::axpy(r[k], x[i], H.antipode[i][k]);
    }
  }
  return r;
}

template <class S>
Coords<S> tensor_of(const Coords<S>& a, const Coords<S>& b) {
  Coords<S> r(a.size() * b.size(), ScalarTraits<S>::zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (ScalarTraits<S>::is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (ScalarTraits<S>::is_zero(b[j])) continue;
      r[i * b.size() + j] = a[i] * b[j];
    }
  }
  return r;
}

// Componentwise product in H (x) H on n^2 coordinate vectors.
template <class S>
Coords<S> tensor_square_multiply(const HopfData& H, const Coords<S>& a, const Coords<S>& b) {
  int n = H.dim;
  Coords<S> r(n * n, ScalarTraits<S>::zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const S& aij = a[i * n + j];
      if (ScalarTraits<S>::is_zero(aij)) continue;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const S& bkl = b[k * n + l];
          if (ScalarTraits<S>::is_zero(bkl)) continue;
          S prod = aij * bkl;
          const Elt& left = H.mult[i][k];
          const Elt& right = H.mult[j][l];
          for (int p = 0; p < n; ++p) {
            if (left[p].is_zero()) continue;
            for (int q = 0; q < n; ++q) {
              if (right[q].is_zero()) continue;
              ScalarTraits<S>::axpy(r[p * n + q], prod, left[p] * right[q]);
            }
          }
        }
    }
  return r;
}

// (Delta (x) id) Delta as an n^3 vector, slot (p*n + q)*n + s.
template <class S>
Coords<S> hopf_comult2(const HopfData& H, const Coords<S>& x) {
  int n = H.dim;
  Coords<S> d = hopf_comultiply(H, x);
  Coords<S> r(n * n * n, ScalarTraits<S>::zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const S& dij = d[i * n + j];
      if (ScalarTraits<S>::is_zero(dij)) continue;
      const Elt& di = H.comult[i];
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          if (di[p * n + q].is_zero()) continue;
          ScalarTraits<S>::axpy(r[(p * n + q) * n + j], dij, di[p * n + q]);
        }
    }
  return r;
}

// Sparse view of the coproduct: the nonzero summands of Delta(e_i).
struct DeltaTerm {
  int a = 0, b = 0;
  FieldElement c;
};
std::vector<std::vector<DeltaTerm>> sparse_comult(const HopfData& H);

// Pretty form "1/2 z + 1/2 gz" using basis names.
std::string elt_str(const HopfData& H, const Elt& x);

bool elt_is_zero(const Elt& x);

// Exhaustive structure verification on all basis tuples: associativity, unit,
// coassociativity, counit, morphism properties of counit/comult, antipode law.
AxiomReport verify_hopf_axioms(const HopfData& H);

struct GroupLikeResult {
  bool complete = false;  // solver enumerated the full solution set
  std::vector<Elt> elements;
};

// All solutions of Delta(x) = x (x) x, counit(x) = 1, found by the exact
// polynomial solver. `complete` reports whether the enumeration is certified.
GroupLikeResult group_likes(const HopfData& H);

}  // namespace h8mp
