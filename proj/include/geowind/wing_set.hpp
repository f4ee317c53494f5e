#ifndef GEOWIND_WING_SET_HPP
#define GEOWIND_WING_SET_HPP

#include <array>
#include <string>
#include <vector>

#include "geowind/icosahedron.hpp"

namespace geowind {

enum class Pole { South, North };

inline Vertex poleVertex(Pole p) { return p == Pole::South ? Vertex::S : Vertex::N; }

/// One wing face: a triangle with one vertex at a pole and the other two on
/// the rings. Faces store labels only; geometry is always resolved through
/// the model, so relabeling tests can compare face sets structurally.
///
/// South face i is (S, U_i, L_i); north face i is (N, U_i, L_{i-1}) with
/// L_0 = L_5.
struct WingFace {
  Pole pole;
  int index;                       // 1..5
  std::array<Vertex, 3> vertices;  // pole vertex first

  std::array<Edge, 3> edges() const {
    return {Edge(vertices[0], vertices[1]), Edge(vertices[1], vertices[2]),
            Edge(vertices[2], vertices[0])};
  }

  /// The edge not incident to the pole vertex: U_i L_i for south faces,
  /// U_i L_{i-1} for north faces.
  Edge crossEdge() const { return Edge(vertices[1], vertices[2]); }

  std::string name() const {
    return (pole == Pole::South ? "S" : "N") + std::to_string(index);
  }
};

/// The ten wing faces in fixed order S1..S5, N1..N5.
struct WingSet {
  std::vector<WingFace> faces;
};

WingSet generateWingSet(const LabeledIcosahedron& model);

/// Resolves a face to its corner coordinates through the model.
std::array<ExactVec3, 3> faceTriangle(const LabeledIcosahedron& model,
                                      const WingFace& face);

/// Exact midpoints of the ten cross-edges, in face order (S1..S5, N1..N5).
/// These are the representative points whose equatorial layout the decagon
/// check validates.
std::vector<ExactVec3> representativePoints(const LabeledIcosahedron& model,
                                            const WingSet& ws);

}  // namespace geowind

#endif  // GEOWIND_WING_SET_HPP
