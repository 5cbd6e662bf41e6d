#pragma once

#include <string>
#include <variant>
#include <vector>

#include "h8mp/hopf.hpp"
#include "h8mp/linalg.hpp"

namespace h8mp {

enum class Side { Left, Right };

// Bilinear action of the Hopf algebra on itself as a table over basis pairs:
// table[i][j] = e_i -> e_j for Left, e_i <- e_j for Right (acting element is
// e_j on the Right side's second slot, i.e. the table row element is acted on).
template <class S>
struct ActionTableT {
  Side side = Side::Left;
  std::vector<std::vector<Coords<S>>> table;  // [i][j] -> coordinates

  int dim() const { return static_cast<int>(table.size()); }
};

using ActionTable = ActionTableT<FieldElement>;

// Left action applied to arbitrary elements, by bilinearity.
template <class S>
Coords<S> act(const ActionTableT<S>& a, const Coords<S>& x, const Coords<S>& y) {
  int n = a.dim();
  Coords<S> r(n, ScalarTraits<S>::zero());
  for (int i = 0; i < n; ++i) {
    if (ScalarTraits<S>::is_zero(x[i])) continue;
    for (int j = 0; j < n; ++j) {
      if (ScalarTraits<S>::is_zero(y[j])) continue;
      S prod = x[i] * y[j];
      for (int k = 0; k < n; ++k) {
        const S& entry = a.table[i][j][k];
        if (ScalarTraits<S>::is_zero(entry)) continue;
        r[k] += prod * entry;
      }
    }
  }
  return r;
}

inline Elt act_basis(const ActionTable& a, int i, int j) { return a.table[i][j]; }

struct MatchedPair {
  ActionTable left;
  ActionTable right;
  std::string provenance;
};

// Module axioms plus coalgebra-morphism axioms, exhaustively on basis tuples.
AxiomReport is_module_coalgebra_action(const HopfData& H, const ActionTable& a);

// The five compatibility identities and the factorization identity,
// exhaustively on basis pairs.
AxiomReport verify_matched_pair_of_actions(const HopfData& H, const MatchedPair& mp);

// x <- y = S(x1 -> y1) x2 y2, computed entrywise by tensor contraction.
ActionTable derive_right_action(const HopfData& H, const ActionTable& left);

struct Rejection {
  std::string reason;
  AxiomReport report;
};

using ConstructResult = std::variant<MatchedPair, Rejection>;

// Derives the right action from the left one and assembles a fully verified
// matched pair, or explains which axiom failed.
ConstructResult construct_matched_pair(const HopfData& H, const ActionTable& left,
                                       const std::string& provenance);

// The counit left action x -> a = counit(x) a.
ActionTable trivial_left_action(const HopfData& H);

// Conjugate an action table along a Hopf isomorphism given by coordinate
// matrices (fwd maps source coordinates to target coordinates).
ActionTable transport_action_table(const ActionTable& src, const Matrix& fwd, const Matrix& bwd);

bool action_tables_equal(const ActionTable& a, const ActionTable& b);

}  // namespace h8mp
