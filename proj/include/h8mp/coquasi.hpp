#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "h8mp/actions.hpp"
#include "h8mp/presentations.hpp"

namespace h8mp {

// Bilinear form R: H (x) H -> k on basis pairs, with its convolution inverse.
struct CoquasiForm {
  enum class Family { Sigma, Tau };
  Family family = Family::Sigma;
  FieldElement param1, param2;  // (alpha, beta) or (gamma, xi)
  Matrix values;                // values[i][j] = R(e_i (x) e_j)
  Matrix inverse_values;
  std::string name() const;
};

// Values on the four comatrix generators, extended to all 64 basis pairs via
// the multiplicativity laws. Well-definedness is enforced by recomputing every
// length-2 generator product along its alternative factorizations.
// generator_values[p][q] is the value on generator pair (p, q), 0-based in
// (x11, x12, x21, x22). Throws IllDefined on disagreement.
Matrix extend_form(const HopfData& H, const std::array<std::array<FieldElement, 4>, 4>& gv);

// sigma family: requires alpha beta = 1 and (alpha beta^-1)^2 = -1.
CoquasiForm build_sigma(const HopfData& a12, const FieldElement& alpha, const FieldElement& beta);

// tau family: requires gamma^2 = xi^2 = 1.
CoquasiForm build_tau(const HopfData& a12, const FieldElement& gamma, const FieldElement& xi);

// The eight parameter choices admitted by the two families.
std::vector<CoquasiForm> all_coquasi_forms(const HopfData& a12);

// Exhaustive check of convolution invertibility, quasi-commutativity and the
// two multiplicativity laws on all basis tuples.
AxiomReport verify_coquasitriangular(const HopfData& H, const CoquasiForm& R);

// a -> b = R^-1(a1 (x) b1) b2 R(a2 (x) b3) and its right-hand mirror; the
// result is passed through the full matched-pair verification.
MatchedPair derive_matched_pair_from_coquasi(const HopfData& H, const CoquasiForm& R);

struct CorrespondenceReport {
  // form name -> classified case label ("unmatched" when none).
  std::vector<std::pair<std::string, std::string>> assignments;
  std::vector<std::string> image_labels;       // classified cases hit
  std::vector<std::string> complement_labels;  // classified cases missed
  // case label -> the parameter choices landing on it.
  std::vector<std::pair<std::string, std::vector<std::string>>> fibers;
};

// Transports each derived matched pair through the presentation isomorphism
// and compares against the classified list entrywise.
CorrespondenceReport match_against_classification(const HopfData& a12, const HopfData& ghz,
                                                  const std::vector<MatchedPair>& derived,
                                                  const HopfIso& iso,
                                                  const std::vector<MatchedPair>& classified);

}  // namespace h8mp
