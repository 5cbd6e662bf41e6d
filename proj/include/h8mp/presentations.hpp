#pragma once

#include "h8mp/hopf.hpp"
#include "h8mp/linalg.hpp"
#include "h8mp/solver.hpp"

namespace h8mp {

// Kac-Paljutkin algebra on generators g, h, z; ordered basis
// (1, g, h, gh, z, gz, hz, ghz).
HopfData build_h8_ghz();

// Comatrix presentation on generators x11, x12, x21, x22; ordered basis
// (1, x11, x12, x21, x22, x11^2, x11x22, x12x21). The multiplication table is
// derived by normalizing generator words against the defining relations, then
// verified, rather than typed in.
HopfData build_a12();

// Hopf isomorphism between the two presentations.
// forward maps A12 coordinates to GHZ coordinates; backward is its inverse.
struct HopfIso {
  Matrix forward;
  Matrix backward;
};

// Generator images inside A12 defining the isomorphism.
Elt a12_image_of_g(const HopfData& a12);
Elt a12_image_of_h(const HopfData& a12);
Elt a12_image_of_z(const HopfData& a12);

// Builds the iso from the generator images and verifies, exhaustively on basis
// elements, that it intertwines mult, unit, comult, counit and antipode.
// Throws IsoVerificationFailed otherwise.
HopfIso build_iso(const HopfData& ghz, const HopfData& a12);

Elt iso_forward(const HopfIso& iso, const Elt& a12_coords);
Elt iso_backward(const HopfIso& iso, const Elt& ghz_coords);

// Constraint system for the coefficients (a1..a4) of z = a1*x11 + a2*x12 +
// a3*x21 + a4*x22: comparison of z^2 against its known value, and optionally
// of Delta(z) against the transported coproduct.
PolySystem z_embedding_system(const HopfData& a12, bool with_delta_constraints);

struct ZEmbedding {
  PolySystem system;
  SolutionSet solutions;          // full solution set of the constraints
  Elt pinned;                     // the branch used by build_iso
  SolverTranscript transcript;
};

// Re-derives the z expansion independently with the exact solver.
// Throws NoSolution if the pinned branch is not among the solutions.
ZEmbedding solve_z_embedding(const HopfData& a12);

}  // namespace h8mp
