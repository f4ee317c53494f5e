#include "geowind/icosahedron.hpp"

#include <algorithm>
#include <tuple>

namespace geowind {

std::string vertexName(Vertex v) {
  switch (v) {
    case Vertex::N:
      return "N";
    case Vertex::S:
      return "S";
    default: {
      const int i = static_cast<int>(v);
      if (i <= static_cast<int>(Vertex::U5)) {
        return "U" + std::to_string(i - static_cast<int>(Vertex::U1) + 1);
      }
      return "L" + std::to_string(i - static_cast<int>(Vertex::L1) + 1);
    }
  }
}

std::string Edge::name() const { return vertexName(a) + "-" + vertexName(b); }

std::vector<Vertex> LabeledIcosahedron::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (int i = 0; i < kVertexCount; ++i) {
    if (adjacency_[static_cast<int>(v)][i]) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

namespace detail {

bool lexLess(const ExactVec3& p, const ExactVec3& q) {
  const auto key = [](const ExactVec3& v) {
    return std::tuple<int, int, int>(v.x().sign(), v.y().sign(), v.z().sign());
  };
  const auto kp = key(p);
  const auto kq = key(q);
  if (kp != kq) return kp < kq;
  for (int c = 0; c < 3; ++c) {
    if (p[c] != q[c]) return p[c] < q[c];
  }
  return false;
}

namespace {

std::vector<int> neighborIndices(std::span<const ExactVec3> pts, int v,
                                 const GoldenRational& sqEdge) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    if (i != v && squaredDistance(pts[v], pts[i]) == sqEdge) out.push_back(i);
  }
  return out;
}

}  // namespace

std::array<ExactVec3, kVertexCount> assignLabels(std::span<const ExactVec3> points,
                                                 const ExactVec3& north,
                                                 const ExactVec3& south,
                                                 const GoldenRational& sqEdge) {
  if (points.size() != kVertexCount) {
    throw LabelingInfeasible("expected 12 vertices, got " +
                             std::to_string(points.size()));
  }
  const auto indexOf = [&](const ExactVec3& p) {
    for (int i = 0; i < kVertexCount; ++i) {
      if (points[i] == p) return i;
    }
    throw LabelingInfeasible("pole is not among the vertices");
  };
  const int n = indexOf(north);
  const int s = indexOf(south);
  if (n == s) throw LabelingInfeasible("poles coincide");

  const std::vector<int> upper = neighborIndices(points, n, sqEdge);
  const std::vector<int> lower = neighborIndices(points, s, sqEdge);
  if (upper.size() != 5 || lower.size() != 5) {
    throw LabelingInfeasible("poles must have exactly 5 neighbors each");
  }
  for (int u : upper) {
    if (u == s || std::find(lower.begin(), lower.end(), u) != lower.end()) {
      throw LabelingInfeasible("rings are not disjoint");
    }
  }
  if (std::find(lower.begin(), lower.end(), n) != lower.end()) {
    throw LabelingInfeasible("poles are adjacent");
  }

  // Walk the upper ring as a 5-cycle. U1 is the lex-smallest ring vertex,
  // the second step goes to the smaller of U1's two ring neighbors.
  const auto ringNeighbors = [&](int v) {
    std::vector<int> out;
    for (int u : upper) {
      if (u != v && squaredDistance(points[v], points[u]) == sqEdge) out.push_back(u);
    }
    return out;
  };

  int u1 = upper[0];
  for (int u : upper) {
    if (lexLess(points[u], points[u1])) u1 = u;
  }
  std::vector<int> firstNbrs = ringNeighbors(u1);
  if (firstNbrs.size() != 2) {
    throw LabelingInfeasible("upper ring is not a 5-cycle");
  }
  const int u2 = lexLess(points[firstNbrs[0]], points[firstNbrs[1]]) ? firstNbrs[0]
                                                                     : firstNbrs[1];
  std::array<int, 5> ringU = {u1, u2, -1, -1, -1};
  for (int i = 2; i < 5; ++i) {
    const std::vector<int> nbrs = ringNeighbors(ringU[i - 1]);
    if (nbrs.size() != 2) throw LabelingInfeasible("upper ring is not a 5-cycle");
    const int next = (nbrs[0] == ringU[i - 2]) ? nbrs[1] : nbrs[0];
    ringU[i] = next;
  }
  {
    const std::vector<int> closing = ringNeighbors(ringU[4]);
    if (std::find(closing.begin(), closing.end(), u1) == closing.end()) {
      throw LabelingInfeasible("upper ring walk does not close");
    }
  }

  // L_i is the unique lower-ring vertex adjacent to both U_i and U_{i+1}.
  std::array<int, 5> ringL = {-1, -1, -1, -1, -1};
  for (int i = 0; i < 5; ++i) {
    int found = -1;
    for (int l : lower) {
      if (squaredDistance(points[ringU[i]], points[l]) == sqEdge &&
          squaredDistance(points[ringU[(i + 1) % 5]], points[l]) == sqEdge) {
        if (found != -1) {
          throw LabelingInfeasible("ambiguous lower-ring assignment");
        }
        found = l;
      }
    }
    if (found == -1) {
      throw LabelingInfeasible("consecutive upper vertices share no lower neighbor");
    }
    ringL[i] = found;
  }
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      if (ringL[i] == ringL[j]) throw LabelingInfeasible("lower ring labels collide");
    }
  }

  std::array<ExactVec3, kVertexCount> out;
  out[static_cast<int>(Vertex::N)] = points[n];
  out[static_cast<int>(Vertex::S)] = points[s];
  for (int i = 0; i < 5; ++i) {
    out[static_cast<int>(upperVertex(i + 1))] = points[ringU[i]];
    out[static_cast<int>(lowerVertex(i + 1))] = points[ringL[i]];
  }
  return out;
}

}  // namespace detail

LabeledIcosahedron buildIcosahedron(const GoldenRational& edgeLength) {
  if (edgeLength.sign() <= 0) {
    throw NonPositiveEdgeLength("NonPositiveEdgeLength: edge length must be > 0, got " +
                                edgeLength.toString());
  }

  const GoldenRational half = edgeLength * GoldenRational::rational(1, 2);
  const GoldenRational phi = GoldenRational::phi();
  const GoldenRational one(1);

  // Standard coordinates for edge length 2, then scaled by edgeLength/2.
  std::vector<ExactVec3> pts;
  pts.reserve(kVertexCount);
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      const GoldenRational a = GoldenRational(s1) * one;
      const GoldenRational b = GoldenRational(s2) * phi;
      pts.push_back(ExactVec3(GoldenRational(0), a, b) * half);
      pts.push_back(ExactVec3(a, b, GoldenRational(0)) * half);
      pts.push_back(ExactVec3(b, GoldenRational(0), a) * half);
    }
  }

  LabeledIcosahedron model;
  model.edge_length_ = edgeLength;
  model.sq_edge_length_ = edgeLength * edgeLength;

  const ExactVec3 north = ExactVec3(GoldenRational(0), one, phi) * half;
  const ExactVec3 south = -north;
  model.positions_ = detail::assignLabels(pts, north, south, model.sq_edge_length_);

  for (int i = 0; i < kVertexCount; ++i) {
    for (int j = i + 1; j < kVertexCount; ++j) {
      if (squaredDistance(model.positions_[i], model.positions_[j]) ==
          model.sq_edge_length_) {
        model.edges_.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        model.adjacency_[i][j] = model.adjacency_[j][i] = true;
      }
    }
  }
  std::sort(model.edges_.begin(), model.edges_.end());

  if (model.edges_.size() != 30) {
    throw LabelingInfeasible("expected 30 edges, got " +
                             std::to_string(model.edges_.size()));
  }
  for (int i = 0; i < kVertexCount; ++i) {
    int degree = 0;
    for (int j = 0; j < kVertexCount; ++j) degree += model.adjacency_[i][j];
    if (degree != 5) throw LabelingInfeasible("vertex degree is not 5");
  }
  if (model.adjacent(Vertex::N, Vertex::S)) {
    throw LabelingInfeasible("poles must not be adjacent");
  }
  for (int i = 1; i <= 5; ++i) {
    if (!model.adjacent(upperVertex(i), lowerVertex(i)) ||
        !model.adjacent(upperVertex(i), lowerVertex(i - 1))) {
      throw LabelingInfeasible("ring indexing contract violated");
    }
  }
  return model;
}

}  // namespace geowind
