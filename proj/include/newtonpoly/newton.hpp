#pragma once

#include "newtonpoly/puiseux.hpp"

#include <optional>
#include <vector>

namespace newtonpoly {

/// Positive weight (k1, k2); a monomial x1^t1 x2^t2 has weighted degree k1 t1 + k2 t2.
struct Weight {
  Rational k1;
  Rational k2;

  Rational ratio() const { return k2 / k1; }
  Rational degree(const ExponentPair& e) const { return k1 * e.e1 + k2 * e.e2; }
  /// 1 / (k1 + k2).
  Rational homogeneous_distance() const { return 1 / (k1 + k2); }
  friend bool operator==(const Weight& a, const Weight& b) { return a.k1 == b.k1 && a.k2 == b.k2; }
};

enum class FaceKind { vertex, compact_edge, halfline_horizontal, halfline_vertical };

const char* to_string(FaceKind kind);

/// A face of the Newton polyhedron. Compact edges carry both endpoints and the
/// weight normalized to k . t = 1 on the edge. Half-lines carry their single
/// finite endpoint.
struct Face {
  FaceKind kind = FaceKind::vertex;
  ExponentPair first;
  std::optional<ExponentPair> second;
  std::optional<Weight> weight;
};

struct EdgeData {
  int index = 0;  // 1-based, left to right
  ExponentPair left;
  ExponentPair right;
  Weight weight;
  Rational a;    // k2 / k1
  Rational d_l;  // bisectrix crossing of the edge's supporting line
};

struct NewtonData {
  std::vector<ExponentPair> vertices;  // decreasing e2
  std::vector<Face> edges;             // compact edges, left to right
  Face principal;
  Rational distance;
  std::vector<EdgeData> edge_data;
};

NewtonData build_polyhedron(const PuiseuxPoly& phi);

inline const Rational& distance(const NewtonData& n) { return n.distance; }
inline const Face& principal_face(const NewtonData& n) { return n.principal; }
inline const std::vector<EdgeData>& edge_cluster_data(const NewtonData& n) { return n.edge_data; }

/// Weight normalized so both edge endpoints have degree one.
Weight edge_weight(const ExponentPair& left, const ExponentPair& right);

/// Sum of the terms of minimal weighted degree.
PuiseuxPoly kappa_principal_part(const PuiseuxPoly& phi, const Weight& kappa);

/// The principal part on the principal face: the whole edge polynomial for a
/// compact edge, the vertex monomial otherwise (for half-lines, the terms on
/// that half-line).
PuiseuxPoly face_part(const PuiseuxPoly& phi, const Face& face);

}  // namespace newtonpoly
