#pragma once

#include <optional>
#include <string>

#include "h8mp/actions.hpp"
#include "h8mp/linalg.hpp"

namespace h8mp {

// The operator r(x @ y) = (x1 -> y1) @ (x2 <- y2) on H (x) H as an
// n^2 x n^2 matrix over the tensor basis e_i (x) e_j (row-major slots).
struct BraidOperator {
  Matrix matrix;
  std::string source;  // matched-pair provenance
};

BraidOperator build_r(const HopfData& H, const MatchedPair& mp);

struct BraidCheck {
  bool holds = false;
  std::string witness;  // first differing triple-tensor slot
};

// Exact test of (r @ id)(id @ r)(r @ id) = (id @ r)(r @ id)(id @ r) on the
// n^3-dimensional space.
BraidCheck check_braid(const HopfData& H, const BraidOperator& r);

bool check_involutive(const BraidOperator& r);

// Exact inverse (certifies bijectivity); nullopt when singular.
std::optional<Matrix> braid_inverse(const BraidOperator& r);

struct CriteriaReport {
  bool contraction_identity = false;  // x <- y = S(x1 -> y) -> x2
  std::string contraction_witness;
  bool antipode_exchange = false;  // S(x <- y) = S(y) -> S(x)
  std::string antipode_witness;
  bool involutive = false;  // r^2 = id, for the cross-check
};

// Evaluates the two involutivity criteria exhaustively on basis pairs and
// cross-checks the first against r^2 = id.
CriteriaReport check_involutivity_criteria(const HopfData& H, const MatchedPair& mp);

}  // namespace h8mp
