#include "newtonpoly/newton.hpp"

#include <algorithm>
#include <stdexcept>

namespace newtonpoly {

const char* to_string(FaceKind kind) {
  switch (kind) {
    case FaceKind::vertex: return "vertex";
    case FaceKind::compact_edge: return "compact_edge";
    case FaceKind::halfline_horizontal: return "halfline_horizontal";
    case FaceKind::halfline_vertical: return "halfline_vertical";
  }
  return "unknown";
}

Weight edge_weight(const ExponentPair& left, const ExponentPair& right) {
  Rational det = left.e1 * right.e2 - right.e1 * left.e2;
  if (sgn(det) == 0) throw std::invalid_argument("degenerate edge");
  Weight w{Rational((right.e2 - left.e2) / det), Rational((left.e1 - right.e1) / det)};
  if (sgn(w.k1) <= 0 || sgn(w.k2) <= 0) throw std::invalid_argument("edge has no positive weight");
  return w;
}

namespace {

// Twice the signed area of (o, a, b); positive for a counterclockwise turn.
Rational cross(const ExponentPair& o, const ExponentPair& a, const ExponentPair& b) {
  return (a.e1 - o.e1) * (b.e2 - o.e2) - (a.e2 - o.e2) * (b.e1 - o.e1);
}

Face vertex_face(const ExponentPair& v) { return Face{FaceKind::vertex, v, std::nullopt, std::nullopt}; }

}  // namespace

NewtonData build_polyhedron(const PuiseuxPoly& phi) {
  if (phi.is_zero()) throw std::invalid_argument("not finite type");
  // Terms are already sorted by (e1, e2); keep the staircase minima.
  std::vector<ExponentPair> stair;
  for (const auto& [e, c] : phi.terms()) {
    if (stair.empty() || e.e2 < stair.back().e2) stair.push_back(e);
  }
  std::vector<ExponentPair> hull;
  for (const auto& p : stair) {
    while (hull.size() >= 2 && sgn(cross(hull[hull.size() - 2], hull.back(), p)) <= 0) hull.pop_back();
    hull.push_back(p);
  }

  NewtonData out;
  out.vertices = hull;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    Weight w = edge_weight(hull[i], hull[i + 1]);
    out.edges.push_back(Face{FaceKind::compact_edge, hull[i], hull[i + 1], w});
    EdgeData ed;
    ed.index = static_cast<int>(i) + 1;
    ed.left = hull[i];
    ed.right = hull[i + 1];
    ed.weight = w;
    ed.a = w.ratio();
    ed.d_l = (ed.right.e1 + ed.a * ed.right.e2) / (1 + ed.a);
    out.edge_data.push_back(ed);
  }

  const ExponentPair& first = hull.front();
  const ExponentPair& last = hull.back();
  if (first.e1 >= first.e2) {
    out.distance = first.e1;
    out.principal = first.e1 == first.e2
                        ? vertex_face(first)
                        : Face{FaceKind::halfline_vertical, first, std::nullopt, std::nullopt};
    return out;
  }
  if (last.e2 >= last.e1) {
    out.distance = last.e2;
    out.principal = last.e1 == last.e2
                        ? vertex_face(last)
                        : Face{FaceKind::halfline_horizontal, last, std::nullopt, std::nullopt};
    return out;
  }
  // first lies above the bisectrix, last below: the crossing is on the chain.
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (hull[i].e1 == hull[i].e2) {
      out.distance = hull[i].e1;
      out.principal = vertex_face(hull[i]);
      return out;
    }
    if (i + 1 < hull.size() && hull[i].e1 < hull[i].e2 && hull[i + 1].e1 > hull[i + 1].e2) {
      out.principal = out.edges[i];
      out.distance = out.edges[i].weight->homogeneous_distance();
      return out;
    }
  }
  throw std::logic_error("bisectrix does not meet the Newton diagram");
}

PuiseuxPoly kappa_principal_part(const PuiseuxPoly& phi, const Weight& kappa) {
  if (phi.is_zero()) return phi;
  std::optional<Rational> best;
  for (const auto& [e, c] : phi.terms()) {
    Rational deg = kappa.degree(e);
    if (!best || deg < *best) best = deg;
  }
  PuiseuxPoly out;
  for (const auto& [e, c] : phi.terms()) {
    if (kappa.degree(e) == *best) out += PuiseuxPoly::monomial(c, e.e1, e.e2);
  }
  return out.with_ramification(phi.ramification());
}

PuiseuxPoly face_part(const PuiseuxPoly& phi, const Face& face) {
  PuiseuxPoly out;
  for (const auto& [e, c] : phi.terms()) {
    bool on = false;
    switch (face.kind) {
      case FaceKind::vertex: on = e == face.first; break;
      case FaceKind::compact_edge: on = face.weight->degree(e) == 1; break;
      case FaceKind::halfline_horizontal: on = e.e2 == face.first.e2; break;
      case FaceKind::halfline_vertical: on = e.e1 == face.first.e1; break;
    }
    if (on) out += PuiseuxPoly::monomial(c, e.e1, e.e2);
  }
  return out.with_ramification(phi.ramification());
}

}  // namespace newtonpoly
