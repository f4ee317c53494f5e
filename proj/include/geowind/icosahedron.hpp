#ifndef GEOWIND_ICOSAHEDRON_HPP
#define GEOWIND_ICOSAHEDRON_HPP

#include <array>
#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "geowind/vec.hpp"

namespace geowind {

/// The 12 vertex labels: two poles on the rotation axis plus an upper ring
/// (the five neighbors of N) and a lower ring (the five neighbors of S),
/// both indexed cyclically modulo 5.
enum class Vertex : int {
  N = 0,
  S = 1,
  U1 = 2,
  U2 = 3,
  U3 = 4,
  U4 = 5,
  U5 = 6,
  L1 = 7,
  L2 = 8,
  L3 = 9,
  L4 = 10,
  L5 = 11,
};

inline constexpr int kVertexCount = 12;

/// U_i with 1-based index taken modulo 5 (upperVertex(0) == U5,
/// upperVertex(6) == U1).
constexpr Vertex upperVertex(int i) {
  const int r = ((i - 1) % 5 + 5) % 5;
  return static_cast<Vertex>(static_cast<int>(Vertex::U1) + r);
}

/// L_i with 1-based index taken modulo 5 (lowerVertex(0) == L5).
constexpr Vertex lowerVertex(int i) {
  const int r = ((i - 1) % 5 + 5) % 5;
  return static_cast<Vertex>(static_cast<int>(Vertex::L1) + r);
}

std::string vertexName(Vertex v);

/// Unordered vertex pair, stored normalized (a < b).
struct Edge {
  Vertex a, b;

  Edge(Vertex x, Vertex y) : a(x), b(y) {
    if (static_cast<int>(a) > static_cast<int>(b)) std::swap(a, b);
  }

  auto operator<=>(const Edge&) const = default;

  std::string name() const;  // e.g. "U2-L2"
};

struct NonPositiveEdgeLength : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The vertex positions do not form a pole-labelable regular icosahedron.
/// Unreachable from buildIcosahedron; exists for corrupted external input.
struct LabelingInfeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Regular icosahedron with the canonical labeling. Vertices carry the
/// standard coordinates (0,+-1,+-phi), (+-1,+-phi,0), (+-phi,0,+-1) scaled
/// by edgeLength/2; the poles are the scaled (0,1,phi) and (0,-1,-phi).
/// Adjacency is derived from exact squared distances, not a table, so
/// construction doubles as a self-check of the coordinate model.
/// Immutable after construction.
class LabeledIcosahedron {
 public:
  const GoldenRational& edgeLength() const { return edge_length_; }
  const GoldenRational& sqEdgeLength() const { return sq_edge_length_; }

  const ExactVec3& position(Vertex v) const {
    return positions_[static_cast<int>(v)];
  }

  /// All 30 edges, sorted by (a, b).
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(Vertex u, Vertex v) const {
    return adjacency_[static_cast<int>(u)][static_cast<int>(v)];
  }

  std::vector<Vertex> neighbors(Vertex v) const;

  /// Rotation axis N - S.
  ExactVec3 axis() const { return position(Vertex::N) - position(Vertex::S); }

 private:
  friend LabeledIcosahedron buildIcosahedron(const GoldenRational&);

  GoldenRational edge_length_;
  GoldenRational sq_edge_length_;
  std::array<ExactVec3, kVertexCount> positions_;
  std::vector<Edge> edges_;
  std::array<std::array<bool, kVertexCount>, kVertexCount> adjacency_{};
};

/// Builds the labeled icosahedron with the given edge length.
/// Throws NonPositiveEdgeLength unless edgeLength > 0.
LabeledIcosahedron buildIcosahedron(const GoldenRational& edgeLength);

namespace detail {

/// Orders 12 positions into the labeled frame {N, S, U1..U5, L1..L5}:
/// U1 is the neighbor of `north` with the lexicographically smallest
/// (sign(x), sign(y), sign(z), x, y, z) key, the ring walks toward the
/// smaller of U1's two ring neighbors, and L_i is the common lower neighbor
/// of U_i and U_{i+1}. Deterministic; throws LabelingInfeasible if the
/// adjacency induced by `sqEdge` is not that of a regular icosahedron with
/// the given poles.
std::array<ExactVec3, kVertexCount> assignLabels(std::span<const ExactVec3> points,
                                                 const ExactVec3& north,
                                                 const ExactVec3& south,
                                                 const GoldenRational& sqEdge);

/// Exact lexicographic key order used for the U1 tie-break.
bool lexLess(const ExactVec3& p, const ExactVec3& q);

}  // namespace detail

}  // namespace geowind

#endif  // GEOWIND_ICOSAHEDRON_HPP
