#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "newtonpoly/newton.hpp"
#include "oracles.hpp"

using namespace newtonpoly;

namespace {

PuiseuxPoly x1() { return PuiseuxPoly::variable(Variable::x1); }
PuiseuxPoly x2() { return PuiseuxPoly::variable(Variable::x2); }
Rational q(long n, long d = 1) { return make_rational(n, d); }
ExponentPair pt(long a, long b) { return ExponentPair(a, b); }

PuiseuxPoly running_example() { return pow(x2() - pow(x1(), 2), 2) + pow(x1(), 5); }

// (s, s) in the polyhedron, tested against the half-planes of the hull.
bool inside(const NewtonData& N, const Rational& s) {
  if (s < N.vertices.front().e1 || s < N.vertices.back().e2) return false;
  for (const auto& e : N.edge_data) {
    if ((e.weight.k1 + e.weight.k2) * s < 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("polyhedron of the running example") {
  NewtonData N = build_polyhedron(running_example());
  CHECK(N.vertices == std::vector<ExponentPair>{pt(0, 2), pt(4, 0)});
  REQUIRE(N.edges.size() == 1);
  CHECK(*N.edges[0].weight == Weight{q(1, 4), q(1, 2)});
  // (2,1) is on the edge line but not a vertex.
  CHECK(N.edges[0].weight->degree(pt(2, 1)) == 1);
  CHECK(distance(N) == q(4, 3));
  CHECK(principal_face(N).kind == FaceKind::compact_edge);
  CHECK(principal_face(N).first == pt(0, 2));
  CHECK(*principal_face(N).second == pt(4, 0));
}

TEST_CASE("single monomial and pure power") {
  NewtonData N = build_polyhedron(pow(x1(), 2) * pow(x2(), 2));
  CHECK(N.vertices == std::vector<ExponentPair>{pt(2, 2)});
  CHECK(N.edges.empty());
  CHECK(distance(N) == 2);
  CHECK(principal_face(N).kind == FaceKind::vertex);

  NewtonData P = build_polyhedron(pow(x2(), 2));
  CHECK(principal_face(P).kind == FaceKind::halfline_horizontal);
  CHECK(principal_face(P).first == pt(0, 2));
  CHECK(distance(P) == 2);

  NewtonData V = build_polyhedron(pow(x1(), 3) + pow(x1(), 2) * x2());
  CHECK(principal_face(V).kind == FaceKind::halfline_vertical);
  CHECK(distance(V) == 2);

  CHECK_THROWS(build_polyhedron(PuiseuxPoly()));
}

TEST_CASE("distance examples") {
  CHECK(distance(build_polyhedron(pow(x1(), 2) + pow(x2(), 2))) == 1);
  NewtonData N = build_polyhedron(pow(x2(), 2) + pow(x1(), 3));
  CHECK(*N.edges.at(0).weight == Weight{q(1, 3), q(1, 2)});
  CHECK(distance(N) == q(6, 5));
}

TEST_CASE("vertex on the bisectrix wins over the adjacent edges") {
  NewtonData N = build_polyhedron(pow(x2(), 3) + x1() * x2() + pow(x1(), 3));
  CHECK(N.edges.size() == 2);
  CHECK(principal_face(N).kind == FaceKind::vertex);
  CHECK(principal_face(N).first == pt(1, 1));
  CHECK(distance(N) == 1);
  // (2,2) on the segment (0,4)-(4,0) is not a vertex.
  NewtonData flat = build_polyhedron(pow(x2(), 4) + pow(x1(), 2) * pow(x2(), 2) + pow(x1(), 4));
  CHECK(flat.vertices.size() == 2);
  CHECK(principal_face(flat).kind == FaceKind::compact_edge);
}

TEST_CASE("kappa principal parts") {
  CHECK(kappa_principal_part(running_example(), Weight{q(1, 4), q(1, 2)}) == pow(x2() - pow(x1(), 2), 2));
  PuiseuxPoly cusp = pow(x2(), 2) + pow(x1(), 3);
  CHECK(kappa_principal_part(cusp, Weight{q(1, 3), q(1, 2)}) == cusp);
  CHECK(kappa_principal_part(cusp + x1() * pow(x2(), 2), Weight{q(1, 3), q(1, 2)}) == cusp);
}

TEST_CASE("edge cluster data") {
  auto one = edge_cluster_data(build_polyhedron(pow(x2(), 2) + pow(x1(), 5)));
  REQUIRE(one.size() == 1);
  CHECK(one[0].weight == Weight{q(1, 5), q(1, 2)});
  CHECK(one[0].a == q(5, 2));
  CHECK(one[0].d_l == q(10, 7));

  auto sq = edge_cluster_data(build_polyhedron(pow(x2() - pow(x1(), 2), 2)));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].left == pt(0, 2));
  CHECK(sq[0].right == pt(4, 0));
  CHECK(sq[0].a == 2);
  CHECK(sq[0].d_l == q(4, 3));

  // (2,2) lies above the segment (0,4)-(3,0): a single edge.
  auto single = edge_cluster_data(build_polyhedron(pow(x2(), 4) + pow(x1(), 2) * pow(x2(), 2) + pow(x1(), 3)));
  REQUIRE(single.size() == 1);
  CHECK(single[0].left == pt(0, 4));
  CHECK(single[0].right == pt(3, 0));
  CHECK(single[0].weight == Weight{q(1, 3), q(1, 4)});
  CHECK(single[0].a == q(3, 4));

  // Two genuine edges, ordered by increasing a.
  auto two = edge_cluster_data(build_polyhedron(pow(x2(), 4) + x1() * pow(x2(), 2) + pow(x1(), 4)));
  REQUIRE(two.size() == 2);
  CHECK(two[0].a == q(1, 2));
  CHECK(two[1].a == q(3, 2));
  CHECK(two[0].right == pt(1, 2));
  CHECK(two[1].left == pt(1, 2));
}

TEST_CASE("Puiseux exponents in the polyhedron") {
  PuiseuxPoly phi = pow(x2(), 2) + PuiseuxPoly::monomial(1, q(7, 2), 0) + PuiseuxPoly::monomial(3, q(3, 2), 1);
  NewtonData N = build_polyhedron(phi);
  CHECK(N.vertices == std::vector<ExponentPair>{pt(0, 2), ExponentPair(q(3, 2), 1), ExponentPair(q(7, 2), 0)});
  CHECK(distance(N) == oracle::brute_force_distance(phi));
}

TEST_CASE("property: hull agrees with the brute-force extreme-point oracle") {
  oracle::Rng g(31);
  for (int i = 0; i < 200; ++i) {
    PuiseuxPoly phi = oracle::random_poly(g, 8, 12);
    NewtonData N = build_polyhedron(phi);
    CHECK(N.vertices == oracle::brute_force_vertices(phi));
    CHECK(distance(N) == oracle::brute_force_distance(phi));
  }
}

TEST_CASE("property: supporting lines, distance boundary, idempotence, ordering") {
  oracle::Rng g(32);
  for (int i = 0; i < 200; ++i) {
    PuiseuxPoly phi = oracle::random_poly(g, 8, 12);
    NewtonData N = build_polyhedron(phi);
    for (const auto& e : N.edge_data) {
      for (const auto& [s, c] : phi.terms()) {
        Rational deg = e.weight.degree(s);
        CHECK(deg >= 1);
        bool on_segment = deg == 1 && s.e2 <= e.left.e2 && s.e2 >= e.right.e2;
        CHECK((deg == 1) == on_segment);
      }
      CHECK(e.d_l == (e.right.e1 + e.a * e.right.e2) / (1 + e.a));
      CHECK(e.d_l == (e.left.e1 + e.a * e.left.e2) / (1 + e.a));
      PuiseuxPoly part = kappa_principal_part(phi, e.weight);
      CHECK(kappa_principal_part(part, e.weight) == part);
    }
    for (std::size_t l = 1; l < N.edge_data.size(); ++l) {
      CHECK(N.edge_data[l - 1].a < N.edge_data[l].a);
      CHECK(N.edge_data[l - 1].left.e2 > N.edge_data[l].left.e2);
    }
    Rational d = distance(N);
    Rational eps = make_rational(1, 1000);
    CHECK(inside(N, d));
    CHECK_FALSE(inside(N, Rational(d - eps)));
  }
}
