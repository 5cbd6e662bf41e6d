#include <doctest.h>

#include <random>

#include "h8mp/field.hpp"

using namespace h8mp;

namespace {

FieldElement i() { return FieldElement::i(); }
FieldElement one() { return FieldElement::one(); }
FieldElement half() { return FieldElement::half(); }

std::mt19937 rng(20240811);

Rational random_rational() {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 8);
  return Rational(num(rng), den(rng));
}

FieldElement random_field() {
  return FieldElement(random_rational(), random_rational(), random_rational(),
                      random_rational());
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4/2") == Rational(-2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(rational_str(Rational(1, 2)) == "1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
}

TEST_CASE("addition identities") {
  CHECK(one() + FieldElement::zero() == one());
  CHECK(FieldElement::zeta() + (-FieldElement::zeta()) == FieldElement::zero());
  FieldElement a = (one() + i()) * half();
  FieldElement b = (one() - i()) * half();
  CHECK(a + b == one());
}

TEST_CASE("multiplication identities") {
  CHECK(FieldElement::zeta(1) * FieldElement::zeta(3) == -one());
  CHECK(FieldElement::sqrt2() * FieldElement::sqrt2() == FieldElement::from_int(2));
  FieldElement a = (one() + i()) * half();
  FieldElement b = (one() - i()) * half();
  CHECK(a * b == half());
  CHECK(i() * i() == -one());
}

TEST_CASE("inverses") {
  CHECK(one().inv() == one());
  FieldElement a = (one() + i()) * half();
  CHECK(a.inv() == one() - i());
  CHECK(FieldElement::zeta().inv() == -FieldElement::zeta(3));
  CHECK_THROWS_AS(FieldElement::zero().inv(), ZeroInverse);
}

TEST_CASE("field axioms on random elements") {
  int nontrivial_inverses = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    FieldElement a = random_field(), b = random_field(), c = random_field();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) {
      CHECK(a * a.inv() == FieldElement::one());
      ++nontrivial_inverses;
    }
  }
  CHECK(nontrivial_inverses > 9000);
}

TEST_CASE("galois automorphisms") {
  for (int k : {1, 3, 5, 7}) {
    FieldElement a = random_field(), b = random_field();
    CHECK(a.galois(k) * b.galois(k) == (a * b).galois(k));
    CHECK(a.galois(k) + b.galois(k) == (a + b).galois(k));
  }
  // zeta -> zeta^3 composed with itself is zeta -> zeta^9 = zeta.
  FieldElement a = random_field();
  CHECK(a.galois(3).galois(3) == a.galois(9 % 8 == 1 ? 1 : 9));
}

TEST_CASE("square roots in the field") {
  auto roots_of = [](const FieldElement& a) { return a.sqrt(); };
  CHECK(roots_of(FieldElement::from_int(2)).size() == 2);
  for (const auto& r : roots_of(FieldElement::from_int(2))) CHECK(r * r == FieldElement::from_int(2));
  CHECK(roots_of(-one()).size() == 2);
  CHECK(roots_of(i()).size() == 2);
  for (const auto& r : roots_of(i())) CHECK(r * r == i());
  CHECK(roots_of(FieldElement::from_int(3)).empty());
  CHECK(roots_of(FieldElement::from_int(-2)).size() == 2);
  CHECK(roots_of(half()).size() == 2);
  // -i/2 must have the root (1 - i)/2.
  FieldElement target = -(i() * half());
  auto roots = roots_of(target);
  REQUIRE(roots.size() == 2);
  FieldElement expected = (one() - i()) * half();
  CHECK((roots[0] == expected || roots[1] == expected));

  for (int trial = 0; trial < 300; ++trial) {
    FieldElement a = random_field();
    auto rs = (a * a).sqrt();
    bool found = false;
    for (const auto& r : rs)
      if (r == a || r == -a) found = true;
    CHECK(found);
    for (const auto& r : rs) CHECK(r * r == a * a);
  }
}

TEST_CASE("string form") {
  CHECK(FieldElement::zero().str() == "0");
  CHECK(((one() + i()) * half()).str() == "1/2+1/2*w^2");
}
