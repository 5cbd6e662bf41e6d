#pragma once

#include <array>
#include <string>
#include <vector>

#include "h8mp/actions.hpp"
#include "h8mp/hopf.hpp"
#include "h8mp/solver.hpp"

namespace h8mp {

// Interaction of the group-like block {1, g, h, gh}: values are basis indices
// 0..3. Seeded on generator pairs and closed under the module axioms and the
// group-like instances of the compatibility identities.
struct GrouplikeCase {
  char name = 'a';
  std::array<std::array<int, 4>, 4> left{};   // left[i][j]: e_i -> e_j
  std::array<std::array<int, 4>, 4> right{};  // right[i][j]: e_i <- e_j
};

// The four candidate group-like interaction tables.
std::vector<GrouplikeCase> enumerate_grouplike_cases();

// An involutive assignment of group-like values for the action of z on
// {g, h, gh} (or mirrored for the right side). image[k] is the basis index of
// the value on basis element k+1.
struct GroupChoice {
  std::array<int, 3> image{1, 2, 3};
  std::string label;  // "i".."iv"
};

// All maps {g,h,gh} -> G(H8) surviving the involution constraint
// z -> (z -> x) = x; exactly the four involutive permutations.
std::vector<GroupChoice> enumerate_group_choices();

struct SituationSpec {
  int index = 0;  // 1..16; 1 and 2 are the two contributing situations
  GroupChoice left_choice;
  GroupChoice right_choice;
};

// The 16 combinations of left/right choices within group-like case (a).
std::vector<SituationSpec> enumerate_situations();

// Variable layout of the unknown action vectors: u = z -> z (a1..a8) and
// v_m = z -> (e_m z) for m = g, h, gh (b1..b8, c1..c8, d1..d8).
constexpr int kVarU = 0;
constexpr int kVarVg = 8;
constexpr int kVarVh = 16;
constexpr int kVarVgh = 24;
constexpr int kVarCount = 32;

std::vector<std::string> situation_var_names();

// The symbolic left-action table of a situation. Every entry is linear in the
// unknown vectors; the relations are the linear consequences tying the v
// vectors back to u (a closed chain when `fully_resolved`).
struct PartialAction {
  SituationSpec situation;
  std::vector<std::vector<Coords<Poly>>> left;  // 8x8, entries of length 8
  std::vector<Poly> relations;                  // residual linear constraints
  bool fully_resolved = false;  // all v vectors eliminated in favour of u
  std::vector<std::string> derivation_log;
};

// Derives the generator-action consequences of the situation from the
// compatibility identities. Throws InconsistentSituation on a ground clash.
PartialAction propagate_structure(const HopfData& H, const SituationSpec& s);

// Compiles the full degree-<=2 axiom instances of the symbolic tables into a
// polynomial system: both module structures, both coalgebra-morphism
// structures, the tensor-symmetry and factorization identities, and the
// group-like-argument instances of the two mixed compatibilities.
PolySystem build_constraint_system(const HopfData& H, const PartialAction& p);

// The cheap necessary subset used first by the staged solve (stage 1), or the
// full system (stage 2, the default above).
PolySystem build_constraint_system(const HopfData& H, const PartialAction& p, int stage);

// Instantiates the symbolic left table at a solved assignment.
ActionTable instantiate_left_action(const HopfData& H, const PartialAction& p,
                                    const Assignment& a);

struct SituationOutcome {
  SituationSpec situation;
  PolySystem system;
  SolutionSet solutions;
  SolverTranscript transcript;
  std::vector<MatchedPair> pairs;  // independently verified
};

SituationOutcome solve_situation(const HopfData& H, const SituationSpec& s);

// Machine-checked emptiness proof for a group-like case: the tensor-symmetry
// residuals split each requirement into two linear alternatives, and every
// combination of alternatives closes contradictory.
struct Refutation {
  char grouplike_case = '?';
  std::vector<std::string> witnesses;  // pure-tensor residuals, rendered
  struct Branch {
    std::string assumption;
    bool closed_empty = false;
    SolverTranscript transcript;
  };
  std::vector<Branch> branches;
};

// Throws NotRefuted when some branch fails to close.
Refutation refute_grouplike_case(const HopfData& H, char which);

struct Classification {
  std::vector<MatchedPair> pairs;  // sorted by case label
  std::vector<SituationOutcome> outcomes;
  std::vector<Refutation> refutations;
};

// Full pipeline: case tree, refutations, 16 situations, exact solving,
// independent verification. `only_situation` restricts to one situation index
// (0 = all); `jobs` bounds worker threads. Throws IncompleteClassification if
// any solver returns an incomplete status.
Classification classify(const HopfData& H, int only_situation = 0, int jobs = 0);

// Known solution patterns (a5..a8) and their case labels.
std::string label_for_solution(const SituationSpec& s, const Assignment& a);

}  // namespace h8mp
