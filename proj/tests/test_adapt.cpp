#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "newtonpoly/adapt.hpp"
#include "newtonpoly/errors.hpp"
#include "oracles.hpp"

using namespace newtonpoly;

namespace {

PuiseuxPoly x1() { return PuiseuxPoly::variable(Variable::x1); }
PuiseuxPoly x2() { return PuiseuxPoly::variable(Variable::x2); }
Rational q(long n, long d = 1) { return make_rational(n, d); }

PuiseuxPoly running_example() { return pow(x2() - pow(x1(), 2), 2) + pow(x1(), 5); }

// x2 -> x2 + rho(x1) for a polynomial jet rho, applied term by term.
PuiseuxPoly shear_by_jet(PuiseuxPoly phi, const std::vector<Rational>& coeffs) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) != 0) phi = substitute_shear(phi, coeffs[i], Rational(static_cast<long>(i + 1)));
  }
  return phi;
}

}  // namespace

TEST_CASE("classification examples") {
  AdaptednessVerdict run = classify_adaptedness(running_example());
  CHECK_FALSE(run.adapted);
  CHECK_FALSE(run.adapt_case);
  CHECK(*run.reason.ratio == 2);
  CHECK(run.reason.ratio_integral);
  CHECK(*run.reason.m_principal == 2);
  CHECK(run.reason.distance == q(4, 3));

  AdaptednessVerdict vert = classify_adaptedness(pow(x1(), 2) * pow(x2(), 2));
  CHECK(vert.adapted);
  CHECK(*vert.adapt_case == AdaptCase::b);

  AdaptednessVerdict cusp = classify_adaptedness(pow(x2(), 2) + pow(x1(), 3));
  CHECK(cusp.adapted);
  CHECK(*cusp.adapt_case == AdaptCase::a);
  CHECK(*cusp.reason.ratio == q(3, 2));
  CHECK_FALSE(cusp.reason.ratio_integral);

  AdaptednessVerdict half = classify_adaptedness(pow(x2(), 2));
  CHECK(half.adapted);
  CHECK(*half.adapt_case == AdaptCase::c);

  CHECK_THROWS_WITH_AS(classify_adaptedness(x1() + pow(x2(), 2)), "has linear part", SymbolicError);
  CHECK_THROWS_WITH_AS(classify_adaptedness(PuiseuxPoly(Rational(1)) + pow(x2(), 2)), "has linear part",
                       SymbolicError);
}

TEST_CASE("one Varchenko step on the running example") {
  AdaptedResult r = varchenko_adapt(running_example());
  REQUIRE(r.sigma_jet.size() == 1);
  CHECK(r.sigma_jet[0].b == 1);
  CHECK(r.sigma_jet[0].m == 2);
  CHECK(r.adapted_poly == pow(x2(), 2) + pow(x1(), 5));
  CHECK(r.height == q(10, 7));
  CHECK(r.verdict.adapted);
  CHECK_FALSE(r.swapped);
  CHECK(sigma_poly(r.sigma_jet) == pow(x1(), 2));
}

TEST_CASE("two Varchenko steps") {
  PuiseuxPoly phi = pow(x2() - pow(x1(), 2) - pow(x1(), 3), 2) + pow(x1(), 9);
  AdaptedResult r = varchenko_adapt(phi);
  REQUIRE(r.steps.size() == 2);
  CHECK(r.steps[0].distance_before == q(4, 3));
  CHECK(r.steps[1].distance_before == q(3, 2));
  CHECK(r.height == q(18, 11));
  CHECK(sigma_poly(r.sigma_jet) == pow(x1(), 2) + pow(x1(), 3));
  CHECK(r.adapted_poly == pow(x2(), 2) + pow(x1(), 9));
}

TEST_CASE("already adapted input takes no steps") {
  AdaptedResult r = varchenko_adapt(pow(x2(), 2) + pow(x1(), 3));
  CHECK(r.steps.empty());
  CHECK(r.sigma_jet.empty());
  CHECK(r.height == q(6, 5));
}

TEST_CASE("linear principal root") {
  PuiseuxPoly phi = pow(x2() - x1(), 2) + pow(x1(), 5);
  AdaptedResult r = varchenko_adapt(phi);
  REQUIRE(r.sigma_jet.size() == 1);
  CHECK(r.sigma_jet[0].m == 1);
  CHECK(r.height == q(10, 7));
}

TEST_CASE("principal root along x1 = b x2^k is handled by exchanging variables") {
  PuiseuxPoly phi = pow(x1() - pow(x2(), 2), 2) + pow(x2(), 5);
  AdaptedResult r = varchenko_adapt(phi);
  CHECK(r.swapped);
  CHECK(r.height == q(10, 7));
  CHECK(replay(phi, r) == r.adapted_poly);
}

TEST_CASE("step budget") {
  PuiseuxPoly phi = pow(x2() - pow(x1(), 2) - pow(x1(), 3), 2) + pow(x1(), 9);
  CHECK_THROWS_WITH_AS(varchenko_adapt(phi, 1), "step budget exceeded", SymbolicError);
  CHECK(default_step_budget(phi) == 6);
}

TEST_CASE("root jets") {
  RootJet run = principal_root_jet(running_example());
  CHECK(run.jet_case == AdaptCase::a);
  CHECK(run.psi == pow(x1(), 2));
  CHECK(run.a == q(5, 2));
  CHECK_FALSE(run.a_p);
  CHECK(1 / (run.weight.k1 + run.weight.k2) == q(10, 7));

  RootJet cubic = principal_root_jet(pow(x2() - pow(x1(), 2), 3) + x2() * pow(x1(), 4));
  CHECK(cubic.jet_case == AdaptCase::a);
  REQUIRE(cubic.a_p);
  CHECK(*cubic.a_p == 2);
  REQUIRE(cubic.c_p);
  CHECK(*cubic.c_p == 1);
  CHECK(cubic.psi == pow(x1(), 2));

  RootJet vert = principal_root_jet(pow(x1(), 2) * pow(x2(), 2));
  CHECK(vert.jet_case == AdaptCase::b);
  CHECK(vert.psi.is_zero());
  // The chosen weight's line meets the polyhedron only at (2,2).
  CHECK(vert.weight.degree(ExponentPair(2, 2)) == 1);

  RootJet flat = principal_root_jet(x1() * pow(x2() - q(1, 2) * pow(x1(), 3), 3));
  CHECK(flat.jet_case == AdaptCase::c);
  CHECK(flat.psi == q(1, 2) * pow(x1(), 3));
  CHECK(flat.a > 3);
}

TEST_CASE("empty second-derivative root set gives c_p = 0") {
  RootJet j = principal_root_jet(pow(x2(), 2) + pow(x1(), 4));
  CHECK(j.jet_case == AdaptCase::a);
  REQUIRE(j.c_p);
  CHECK(*j.c_p == 0);
  CHECK(j.psi.is_zero());
  CHECK_FALSE(j.warnings.empty());
}

TEST_CASE("property: shear invariance of the height") {
  oracle::Rng g(51);
  int compared = 0;
  for (int i = 0; i < 100; ++i) {
    PuiseuxPoly phi = oracle::random_critical_poly(g, 6, 8, 4);
    std::vector<Rational> rho{oracle::small_rational(g, 3, 2), oracle::small_rational(g, 3, 2),
                              oracle::small_rational(g, 3, 2)};
    PuiseuxPoly sheared = shear_by_jet(phi, rho);
    try {
      AdaptedResult a = varchenko_adapt(phi, 40);
      AdaptedResult b = varchenko_adapt(sheared, 40);
      CHECK_MESSAGE(a.height == b.height, to_string(phi));
      ++compared;
    } catch (const SymbolicError& e) {
      // Irrational principal roots cannot be followed exactly.
      MESSAGE("skipped " << to_string(phi) << ": " << e.what());
    }
  }
  CHECK(compared >= 90);
}

TEST_CASE("property: trace, height bounds, replay, case (a) weights") {
  oracle::Rng g(52);
  for (int i = 0; i < 150; ++i) {
    PuiseuxPoly phi = oracle::random_critical_poly(g, 6, 8, 4);
    if (i % 3 == 0) phi = shear_by_jet(phi, {Rational(0), oracle::small_rational(g, 3, 1)});
    AdaptedResult r;
    try {
      r = varchenko_adapt(phi, 40);
    } catch (const SymbolicError&) {
      continue;
    }
    for (std::size_t s = 1; s < r.steps.size(); ++s) CHECK(r.steps[s - 1].distance_before < r.steps[s].distance_before);
    if (!r.steps.empty()) CHECK(r.steps.back().distance_before < r.height);

    Rational d = distance(build_polyhedron(phi));
    CHECK(r.height >= d);
    // Exchanging variables keeps the distance, so adaptedness of phi is
    // equivalent to h = d.
    CHECK((r.height == d) == classify_adaptedness(phi).adapted);

    CHECK(replay(phi, r) == r.adapted_poly);
    CHECK(build_polyhedron(replay(phi, r)).vertices == build_polyhedron(r.adapted_poly).vertices);
    CHECK(distance(build_polyhedron(r.adapted_poly)) == r.height);

    for (std::size_t s = 1; s < r.sigma_jet.size(); ++s) CHECK(r.sigma_jet[s - 1].m < r.sigma_jet[s].m);

    RootJet jet = principal_root_jet(r);
    if (jet.jet_case == AdaptCase::a) CHECK(1 / (jet.weight.k1 + jet.weight.k2) == r.height);
    if (!r.sigma_jet.empty()) CHECK(jet.a > r.sigma_jet.back().m);
  }
}
