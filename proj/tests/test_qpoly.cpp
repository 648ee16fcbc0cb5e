#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "newtonpoly/qpoly.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace newtonpoly;

namespace {

QPoly lin(const Rational& root) { return QPoly({Rational(-root), Rational(1)}); }

QPoly power(const QPoly& p, int k) {
  QPoly out({Rational(1)});
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

}  // namespace

TEST_CASE("division and gcd") {
  QPoly a = lin(1) * lin(2) * lin(3);
  QPoly b = lin(2) * lin(5);
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(gcd(a, b) == lin(2));
  CHECK(gcd(a, QPoly()) == a.monic());
  CHECK_THROWS(divmod(a, QPoly()));
}

TEST_CASE("squarefree decomposition of t^2+1 and t^2-1 by hand") {
  QPoly plus({Rational(1), Rational(0), Rational(1)});
  QPoly minus({Rational(-1), Rational(0), Rational(1)});
  auto d = squarefree_decomposition(plus * minus * minus);
  REQUIRE(d.size() == 2);
  CHECK(d[0].second == 1);
  CHECK(d[0].first == plus);
  CHECK(d[1].second == 2);
  CHECK(d[1].first == minus);
}

TEST_CASE("real root isolation") {
  QPoly f = lin(make_rational(-7, 3)) * lin(0) * lin(make_rational(1, 1000)) * QPoly({Rational(2), 0, Rational(1)});
  auto roots = isolate_real_roots(f);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0].approx == doctest::Approx(-7.0 / 3));
  CHECK(roots[1].approx == doctest::Approx(0.0));
  CHECK(roots[2].approx == doctest::Approx(0.001));
  CHECK(*rational_root_value(f, roots[0]) == make_rational(-7, 3));
  CHECK(*rational_root_value(f, roots[2]) == make_rational(1, 1000));

  QPoly sqrt2({Rational(-2), 0, Rational(1)});
  auto r2 = isolate_real_roots(sqrt2);
  REQUIRE(r2.size() == 2);
  CHECK(r2[1].approx == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_FALSE(rational_root_value(sqrt2, r2[1]).has_value());
  CHECK(isolate_real_roots(QPoly({Rational(1), 0, Rational(1)})).empty());
}

TEST_CASE("property: Yun recovers planted multiplicities and Sturm counts the roots") {
  oracle::Rng g(21);
  for (int trial = 0; trial < 100; ++trial) {
    int k = static_cast<int>(oracle::uniform_int(g, 1, 4));
    std::vector<std::pair<Rational, int>> planted;
    QPoly f({Rational(oracle::uniform_int(g, 1, 5))});
    for (int i = 0; i < k; ++i) {
      Rational r = oracle::small_rational(g, 9, 5);
      bool dup = std::any_of(planted.begin(), planted.end(), [&](const auto& p) { return p.first == r; });
      if (dup) continue;
      int m = static_cast<int>(oracle::uniform_int(g, 1, 4));
      planted.emplace_back(r, m);
      f = f * power(lin(r), m);
    }
    bool quad = oracle::uniform_int(g, 0, 1) == 1;
    if (quad) f = f * QPoly({Rational(3), Rational(1), Rational(1)});  // no real roots

    auto sqf = squarefree_decomposition(f);
    QPoly rebuilt({Rational(1)});
    for (const auto& [fac, m] : sqf) rebuilt = rebuilt * power(fac, m);
    CHECK(rebuilt == f.monic());

    std::vector<std::pair<Rational, int>> found;
    for (const auto& [fac, m] : sqf) {
      for (const auto& root : isolate_real_roots(fac)) {
        auto v = rational_root_value(fac, root);
        REQUIRE(v.has_value());
        found.emplace_back(*v, m);
      }
    }
    std::sort(planted.begin(), planted.end());
    std::sort(found.begin(), found.end());
    CHECK(found == planted);

    SturmChain chain(f);  // distinct roots, even with repeated factors
    Rational b = root_bound(f);
    CHECK(chain.count(-b, b) == static_cast<int>(planted.size()));
  }
}
