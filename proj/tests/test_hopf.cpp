#include <doctest.h>

#include <algorithm>

#include "h8mp/presentations.hpp"

using namespace h8mp;

namespace {

const FieldElement kOne = FieldElement::one();
const FieldElement kHalf = FieldElement::half();

Elt parse_named(const HopfData& H,
                std::initializer_list<std::pair<const char*, FieldElement>> terms) {
  Elt e(H.dim);
  for (auto& [name, c] : terms) e[H.index_of(name)] += c;
  return e;
}

// Tiny fixture: the group algebra of the order-2 group.
HopfData build_c2_group_algebra() {
  HopfData H;
  H.dim = 2;
  H.basis_names = {"1", "t"};
  H.unit = H.basis_elt(0);
  H.mult.assign(2, std::vector<Elt>(2));
  H.mult[0][0] = H.basis_elt(0);
  H.mult[0][1] = H.basis_elt(1);
  H.mult[1][0] = H.basis_elt(1);
  H.mult[1][1] = H.basis_elt(0);
  H.comult.assign(2, Elt(4));
  H.comult[0][0] = kOne;
  H.comult[1][3] = kOne;
  H.counit = {kOne, kOne};
  H.antipode.assign(2, Elt(2));
  H.antipode[0][0] = kOne;
  H.antipode[1][1] = kOne;
  return H;
}

}  // namespace

TEST_CASE("dim-8 algebra satisfies every Hopf axiom") {
  HopfData H = build_h8_ghz();
  AxiomReport rep = verify_hopf_axioms(H);
  INFO(rep.summary());
  CHECK(rep.all_ok());
}

TEST_CASE("defining relations of the g,h,z presentation") {
  HopfData H = build_h8_ghz();
  int z = H.index_of("z"), g = H.index_of("g"), h = H.index_of("h");

  // z*z = (1 + g + h - gh)/2
  Elt z2 = hopf_multiply(H, H.basis_elt(z), H.basis_elt(z));
  Elt expect = parse_named(H, {{"1", kHalf}, {"g", kHalf}, {"h", kHalf}, {"gh", -kHalf}});
  CHECK(z2 == expect);

  // z*g = hz, z*h = gz, g*h = h*g
  CHECK(hopf_multiply(H, H.basis_elt(z), H.basis_elt(g)) == H.basis_elt(H.index_of("hz")));
  CHECK(hopf_multiply(H, H.basis_elt(z), H.basis_elt(h)) == H.basis_elt(H.index_of("gz")));
  CHECK(hopf_multiply(H, H.basis_elt(g), H.basis_elt(h)) ==
        hopf_multiply(H, H.basis_elt(h), H.basis_elt(g)));
  CHECK(hopf_multiply(H, H.basis_elt(g), H.basis_elt(g)) == H.unit);

  // unit law on a combination
  Elt x = parse_named(H, {{"z", kHalf}, {"gh", kOne}, {"ghz", -kHalf}});
  CHECK(hopf_multiply(H, H.unit, x) == x);
  CHECK(hopf_multiply(H, x, H.unit) == x);
}

TEST_CASE("coproduct values of the g,h,z presentation") {
  HopfData H = build_h8_ghz();
  int z = H.index_of("z"), g = H.index_of("g");
  // Delta(z) = 1/2 (z@z + gz@z + z@hz - gz@hz)
  Elt dz = hopf_comultiply(H, H.basis_elt(z));
  Elt expect(64);
  auto slot = [&](const char* a, const char* b) { return H.index_of(a) * 8 + H.index_of(b); };
  expect[slot("z", "z")] = kHalf;
  expect[slot("gz", "z")] = kHalf;
  expect[slot("z", "hz")] = kHalf;
  expect[slot("gz", "hz")] = -kHalf;
  CHECK(dz == expect);

  CHECK(hopf_comultiply(H, H.basis_elt(g)) == tensor_of(H.basis_elt(g), H.basis_elt(g)));
  CHECK(hopf_comultiply(H, H.unit) == tensor_of(H.unit, H.unit));

  // Delta(gz) = (g @ g) Delta(z) = 1/2 (gz@gz + z@gz + gz@ghz - z@ghz)
  Elt dgz = hopf_comultiply(H, H.basis_elt(H.index_of("gz")));
  Elt expect2(64);
  expect2[slot("gz", "gz")] = kHalf;
  expect2[slot("z", "gz")] = kHalf;
  expect2[slot("gz", "ghz")] = kHalf;
  expect2[slot("z", "ghz")] = -kHalf;
  CHECK(dgz == expect2);
}

TEST_CASE("antipode values and properties") {
  HopfData H = build_h8_ghz();
  CHECK(hopf_antipode(H, H.basis_elt(H.index_of("z"))) == H.basis_elt(H.index_of("z")));
  // S anti-homomorphism: S(gz) = S(z)S(g) = zg = hz
  CHECK(hopf_antipode(H, H.basis_elt(H.index_of("gz"))) == H.basis_elt(H.index_of("hz")));
  CHECK(hopf_antipode(H, H.unit) == H.unit);
  // S^2 = id on the basis.
  for (int i = 0; i < 8; ++i)
    CHECK(hopf_antipode(H, hopf_antipode(H, H.basis_elt(i))) == H.basis_elt(i));
}

TEST_CASE("z has multiplicative order 4") {
  HopfData H = build_h8_ghz();
  Elt z = H.basis_elt(H.index_of("z"));
  Elt z2 = hopf_multiply(H, z, z);
  Elt z4 = hopf_multiply(H, z2, z2);
  CHECK(z4 == H.unit);
  CHECK(!(z2 == H.unit));
}

TEST_CASE("group-like elements of the g,h,z presentation") {
  HopfData H = build_h8_ghz();
  GroupLikeResult gl = group_likes(H);
  REQUIRE(gl.complete);
  REQUIRE(gl.elements.size() == 4);
  std::vector<Elt> expect = {H.basis_elt(0), H.basis_elt(1), H.basis_elt(2), H.basis_elt(3)};
  std::sort(expect.begin(), expect.end());
  CHECK(gl.elements == expect);
}

TEST_CASE("group-likes of a small group algebra") {
  HopfData H = build_c2_group_algebra();
  CHECK(verify_hopf_axioms(H).all_ok());
  GroupLikeResult gl = group_likes(H);
  REQUIRE(gl.complete);
  REQUIRE(gl.elements.size() == 2);
}

TEST_CASE("corrupted multiplication table is caught with a witness") {
  HopfData H = build_h8_ghz();
  // Corrupt z*g from hz to gz.
  H.mult[H.index_of("z")][H.index_of("g")] = H.basis_elt(H.index_of("gz"));
  AxiomReport rep = verify_hopf_axioms(H);
  CHECK(!rep.all_ok());
  CHECK(rep.first_failure() != nullptr);
  CHECK(!rep.first_failure()->witness.empty());
}

TEST_CASE("comultiplication morphism property holds pairwise") {
  HopfData H = build_h8_ghz();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Elt lhs = hopf_comultiply(H, hopf_multiply(H, H.basis_elt(i), H.basis_elt(j)));
      Elt rhs = tensor_square_multiply(H, H.comult[i], H.comult[j]);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("antipode matrix is invertible") {
  HopfData H = build_h8_ghz();
  Matrix S(8, std::vector<FieldElement>(8));
  for (int i = 0; i < 8; ++i)
    for (int k = 0; k < 8; ++k) S[k][i] = H.antipode[i][k];
  CHECK(mat_inverse(S).has_value());
}
