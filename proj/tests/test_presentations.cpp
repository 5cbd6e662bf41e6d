#include <doctest.h>

#include "h8mp/presentations.hpp"

using namespace h8mp;

namespace {

const FieldElement kOne = FieldElement::one();
const FieldElement kHalf = FieldElement::half();

}  // namespace

TEST_CASE("comatrix presentation satisfies every Hopf axiom") {
  HopfData A = build_a12();
  AxiomReport rep = verify_hopf_axioms(A);
  INFO(rep.summary());
  CHECK(rep.all_ok());
}

TEST_CASE("rewriting reproduces the defining relations") {
  HopfData A = build_a12();
  int x11 = A.index_of("x11"), x12 = A.index_of("x12"), x21 = A.index_of("x21"),
      x22 = A.index_of("x22");

  // x21 x12 = -x12 x21
  Elt lhs = hopf_multiply(A, A.basis_elt(x21), A.basis_elt(x12));
  Elt expect(8);
  expect[A.index_of("x12x21")] = -kOne;
  CHECK(lhs == expect);

  // x12^2 = 1 - x11^2
  Elt sq = hopf_multiply(A, A.basis_elt(x12), A.basis_elt(x12));
  Elt expect2(8);
  expect2[0] = kOne;
  expect2[A.index_of("x11^2")] = -kOne;
  CHECK(sq == expect2);

  // x11 x12 = 0 and the other annihilating products
  CHECK(elt_is_zero(hopf_multiply(A, A.basis_elt(x11), A.basis_elt(x12))));
  CHECK(elt_is_zero(hopf_multiply(A, A.basis_elt(x21), A.basis_elt(x22))));

  // x22^2 = x11^2, x11 x22 commutes
  CHECK(hopf_multiply(A, A.basis_elt(x22), A.basis_elt(x22)) ==
        hopf_multiply(A, A.basis_elt(x11), A.basis_elt(x11)));
  CHECK(hopf_multiply(A, A.basis_elt(x22), A.basis_elt(x11)) ==
        hopf_multiply(A, A.basis_elt(x11), A.basis_elt(x22)));

  // words of length three collapse: x11^2 * x11 = x11
  CHECK(hopf_multiply(A, A.basis_elt(A.index_of("x11^2")), A.basis_elt(x11)) ==
        A.basis_elt(x11));
}

TEST_CASE("associativity of the rewritten table on all basis triples") {
  HopfData A = build_a12();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) {
        Elt l = hopf_multiply(A, hopf_multiply(A, A.basis_elt(i), A.basis_elt(j)),
                              A.basis_elt(k));
        Elt r = hopf_multiply(A, A.basis_elt(i),
                              hopf_multiply(A, A.basis_elt(j), A.basis_elt(k)));
        CHECK(l == r);
      }
}

TEST_CASE("group-likes of the comatrix presentation") {
  HopfData A = build_a12();
  GroupLikeResult gl = group_likes(A);
  REQUIRE(gl.complete);
  REQUIRE(gl.elements.size() == 4);
  // 1, x11^2 - x12^2 = 2 x11^2 - 1, x11x22 +- sqrt(-1) x12x21.
  FieldElement i = FieldElement::i();
  Elt klein(8);
  klein[0] = -kOne;
  klein[A.index_of("x11^2")] = FieldElement::from_int(2);
  Elt gplus(8), gminus(8);
  gplus[A.index_of("x11x22")] = kOne;
  gplus[A.index_of("x12x21")] = i;
  gminus[A.index_of("x11x22")] = kOne;
  gminus[A.index_of("x12x21")] = -i;
  std::vector<Elt> expect = {A.unit, klein, gplus, gminus};
  std::sort(expect.begin(), expect.end());
  CHECK(gl.elements == expect);
}

TEST_CASE("iso maps the generators as specified") {
  HopfData G = build_h8_ghz();
  HopfData A = build_a12();
  HopfIso iso = build_iso(G, A);

  // image of z = (1+i)/2 x11 + (1-i)/2 x22 + sqrt(2)/2 (x12 + x21)
  Elt img_z = iso_backward(iso, G.basis_elt(G.index_of("z")));
  FieldElement i = FieldElement::i();
  FieldElement s2h = FieldElement::sqrt2() * kHalf;
  Elt expect(8);
  expect[A.index_of("x11")] = (kOne + i) * kHalf;
  expect[A.index_of("x22")] = (kOne - i) * kHalf;
  expect[A.index_of("x12")] = s2h;
  expect[A.index_of("x21")] = s2h;
  CHECK(img_z == expect);

  // image of g = x11x22 + sqrt(-1) x12x21
  Elt img_g = iso_backward(iso, G.basis_elt(G.index_of("g")));
  Elt expect_g(8);
  expect_g[A.index_of("x11x22")] = kOne;
  expect_g[A.index_of("x12x21")] = i;
  CHECK(img_g == expect_g);

  CHECK(iso_backward(iso, G.unit) == A.unit);
  CHECK(iso_forward(iso, A.unit) == G.unit);

  // forward and backward are mutually inverse
  CHECK(mat_mul(iso.forward, iso.backward) == identity_matrix(8));
  CHECK(mat_mul(iso.backward, iso.forward) == identity_matrix(8));
}

TEST_CASE("iso transports group-likes onto group-likes") {
  HopfData G = build_h8_ghz();
  HopfData A = build_a12();
  HopfIso iso = build_iso(G, A);
  GroupLikeResult gl = group_likes(A);
  REQUIRE(gl.complete);
  std::vector<Elt> images;
  for (const Elt& e : gl.elements) images.push_back(iso_forward(iso, e));
  std::sort(images.begin(), images.end());
  std::vector<Elt> expect = {G.basis_elt(0), G.basis_elt(1), G.basis_elt(2), G.basis_elt(3)};
  std::sort(expect.begin(), expect.end());
  CHECK(images == expect);
}

TEST_CASE("embedding system contains the key constraint and pins the expansion") {
  HopfData A = build_a12();
  PolySystem no_delta = z_embedding_system(A, false);
  // a1 a4 - 1/2 appears (monic) among the generated equations.
  Poly key = Poly::variable(0) * Poly::variable(3) - Poly::constant(kHalf);
  bool present = false;
  for (const Poly& p : no_delta.eqs)
    if (p.monic() == key.monic()) present = true;
  CHECK(present);

  ZEmbedding emb = solve_z_embedding(A);
  REQUIRE(emb.solutions.complete);
  CHECK(emb.solutions.solutions.size() >= 1);
  // Every reported solution satisfies the full system.
  for (const auto& a : emb.solutions.solutions)
    for (const Poly& p : emb.system.eqs) CHECK(p.eval(a).is_zero());
  // The pinned branch carries the published coefficients.
  FieldElement i = FieldElement::i();
  CHECK(emb.pinned[A.index_of("x11")] == (kOne + i) * kHalf);
  CHECK(emb.pinned[A.index_of("x22")] == (kOne - i) * kHalf);
}

TEST_CASE("dropping the coproduct constraints admits spurious points") {
  HopfData A = build_a12();
  // (a1..a4) = ((1+i)/2, 1, 0, (1-i)/2) satisfies the square comparison but
  // not the coproduct comparison.
  FieldElement i = FieldElement::i();
  Assignment point{{0, (kOne + i) * kHalf},
                   {1, kOne},
                   {2, FieldElement::zero()},
                   {3, (kOne - i) * kHalf}};
  PolySystem reduced = z_embedding_system(A, false);
  for (const Poly& p : reduced.eqs) CHECK(p.eval(point).is_zero());
  PolySystem full = z_embedding_system(A, true);
  bool all_zero = true;
  for (const Poly& p : full.eqs)
    if (!p.eval(point).is_zero()) all_zero = false;
  CHECK(!all_zero);
}
