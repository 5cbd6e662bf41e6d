#include <doctest.h>

#include "h8mp/solver.hpp"

using namespace h8mp;

namespace {

Poly var(int v) { return Poly::variable(v); }
Poly cpoly(int n) { return Poly::constant(FieldElement::from_int(n)); }

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  Poly p = var(0) * var(1) + cpoly(2) * var(0);
  CHECK(p.degree() == 2);
  CHECK(p.term_count() == 2);
  Poly q = p.substitute(1, cpoly(3));
  // x*3 + 2x = 5x
  CHECK(q == var(0) * cpoly(5));
  Assignment a{{0, FieldElement::from_int(4)}};
  CHECK(q.eval(a) == FieldElement::from_int(20));
  CHECK((p - p).is_zero());
  CHECK(p.homogeneous_part(2) == var(0) * var(1));
}

TEST_CASE("linear systems solve by substitution") {
  PolySystem sys;
  sys.add_var("x");
  sys.add_var("y");
  sys.add(var(0) + var(1) - cpoly(3));
  sys.add(var(0) - var(1) - cpoly(1));
  SolutionSet s = solve_system(sys);
  REQUIRE(s.complete);
  REQUIRE(s.solutions.size() == 1);
  CHECK(s.solutions[0].at(0) == FieldElement::from_int(2));
  CHECK(s.solutions[0].at(1) == FieldElement::one());
}

TEST_CASE("inconsistent linear system is contradictory") {
  PolySystem sys;
  sys.add_var("x");
  sys.add(var(0) - cpoly(1));
  sys.add(var(0) - cpoly(2));
  SolutionSet s = solve_system(sys);
  CHECK(s.complete);
  CHECK(s.solutions.empty());
}

TEST_CASE("univariate quadratics split on field square roots") {
  {
    PolySystem sys;
    sys.add_var("x");
    sys.add(var(0) * var(0) + cpoly(1));  // x^2 = -1
    SolutionSet s = solve_system(sys);
    REQUIRE(s.complete);
    REQUIRE(s.solutions.size() == 2);
    for (const auto& a : s.solutions) {
      FieldElement x = a.at(0);
      CHECK(x * x == -FieldElement::one());
    }
  }
  {
    // x^2 = 3 has no root in the field: honest incompleteness, not emptiness.
    PolySystem sys;
    sys.add_var("x");
    sys.add(var(0) * var(0) - cpoly(3));
    SolutionSet s = solve_system(sys);
    CHECK(!s.complete);
    CHECK(s.solutions.empty());
  }
}

TEST_CASE("monomial equations branch per variable") {
  PolySystem sys;
  sys.add_var("x");
  sys.add_var("y");
  sys.add(var(0) * var(1));           // xy = 0
  sys.add(var(0) + var(1) - cpoly(2));  // x + y = 2
  SolutionSet s = solve_system(sys);
  REQUIRE(s.complete);
  REQUIRE(s.solutions.size() == 2);  // (0,2) and (2,0)
}

TEST_CASE("binary quadratic forms factor over the field") {
  PolySystem sys;
  sys.add_var("x");
  sys.add_var("y");
  sys.add(var(0) * var(0) + var(1) * var(1));  // (x+iy)(x-iy) = 0
  sys.add(var(0) * var(1) - Poly::constant(FieldElement::half()));
  SolutionSet s = solve_system(sys);
  REQUIRE(s.complete);
  REQUIRE(s.solutions.size() == 4);
  for (const auto& a : s.solutions) {
    FieldElement x = a.at(0), y = a.at(1);
    CHECK(x * x + y * y == FieldElement::zero());
    CHECK(x * y == FieldElement::half());
  }
}

TEST_CASE("products of affine forms split") {
  PolySystem sys;
  sys.add_var("x");
  sys.add_var("y");
  // (x + y - 1) * y = 0 presented expanded
  sys.add(var(0) * var(1) + var(1) * var(1) - var(1));
  sys.add(var(0) - cpoly(5));
  SolutionSet s = solve_system(sys);
  REQUIRE(s.complete);
  REQUIRE(s.solutions.size() == 2);
  for (const auto& a : s.solutions) {
    FieldElement y = a.at(1);
    CHECK((y.is_zero() || y == FieldElement::from_int(-4)));
  }
}

TEST_CASE("row reduction surfaces hidden contradictions") {
  // Two equations with identical quadratic parts but different constants.
  PolySystem sys;
  sys.add_var("x");
  sys.add_var("y");
  Poly quad = var(0) * var(1) + var(0) * var(0);
  sys.add(quad - Poly::constant(FieldElement::half()));
  sys.add(quad + Poly::constant(FieldElement::half()));
  SolutionSet s = solve_system(sys);
  CHECK(s.complete);
  CHECK(s.solutions.empty());
}

TEST_CASE("transcripts replay deterministically") {
  PolySystem sys;
  sys.add_var("x");
  sys.add_var("y");
  sys.add(var(0) * var(0) - cpoly(1));
  sys.add(var(1) * var(1) - var(0) * var(0));
  SolverTranscript t1, t2;
  SolutionSet s1 = solve_system(sys, &t1);
  SolutionSet s2 = solve_system(sys, &t2);
  CHECK(t1 == t2);
  CHECK(s1.solutions == s2.solutions);
  REQUIRE(s1.complete);
  CHECK(s1.solutions.size() == 4);
}

TEST_CASE("implication checking by evaluation on the solution set") {
  PolySystem sys;
  sys.add_var("x");
  sys.add_var("y");
  sys.add(var(0) * var(0) - cpoly(1));
  sys.add(var(1) - var(0));
  SolutionSet s = solve_system(sys);
  REQUIRE(s.complete);
  CHECK(vanishes_on_solutions(s, var(0) * var(1) - cpoly(1)));
  CHECK(!vanishes_on_solutions(s, var(0) - cpoly(1)));
}
