#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "geowind/icosahedron.hpp"

using geowind::buildIcosahedron;
using geowind::Edge;
using geowind::ExactVec3;
using geowind::GoldenRational;
using geowind::LabeledIcosahedron;
using geowind::Vertex;

namespace {

ExactVec3 vec(const GoldenRational& x, const GoldenRational& y,
              const GoldenRational& z) {
  return ExactVec3(x, y, z);
}

bool samePoint(const ExactVec3& a, const ExactVec3& b) {
  return (a - b).squaredNorm().isZero();
}

// The twelve raw points (0,±1,±phi), (±1,±phi,0), (±phi,0,±1): the model
// with edge length 2.
std::vector<ExactVec3> rawEdge2Points() {
  const GoldenRational one(1), phi = GoldenRational::phi();
  std::vector<ExactVec3> pts;
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      const GoldenRational a = s1 * one, b = s2 * phi;
      pts.push_back(vec(GoldenRational(0), a, b));
      pts.push_back(vec(a, b, GoldenRational(0)));
      pts.push_back(vec(b, GoldenRational(0), a));
    }
  }
  return pts;
}

}  // namespace

TEST_CASE("edge-2 model realizes the cyclic coordinate family") {
  const LabeledIcosahedron model = buildIcosahedron(GoldenRational(2));
  const std::vector<ExactVec3> expected = rawEdge2Points();
  REQUIRE(expected.size() == 12);
  for (int v = 0; v < geowind::kVertexCount; ++v) {
    const ExactVec3& p = model.position(static_cast<Vertex>(v));
    CHECK(std::any_of(expected.begin(), expected.end(),
                      [&](const ExactVec3& q) { return samePoint(p, q); }));
  }
}

TEST_CASE("edge-2 labels are pinned") {
  const LabeledIcosahedron m = buildIcosahedron(GoldenRational(2));
  const GoldenRational z(0), one(1), phi = GoldenRational::phi();
  CHECK(samePoint(m.position(Vertex::N), vec(z, one, phi)));
  CHECK(samePoint(m.position(Vertex::S), vec(z, -one, -phi)));
  CHECK(samePoint(m.position(Vertex::U1), vec(-phi, z, one)));
  CHECK(samePoint(m.position(Vertex::U2), vec(-one, phi, z)));
  CHECK(samePoint(m.position(Vertex::U3), vec(one, phi, z)));
  CHECK(samePoint(m.position(Vertex::U4), vec(phi, z, one)));
  CHECK(samePoint(m.position(Vertex::U5), vec(z, -one, phi)));
  CHECK(samePoint(m.position(Vertex::L1), vec(-phi, z, -one)));
  CHECK(samePoint(m.position(Vertex::L2), vec(z, one, -phi)));
  CHECK(samePoint(m.position(Vertex::L3), vec(phi, z, -one)));
  CHECK(samePoint(m.position(Vertex::L4), vec(one, -phi, z)));
  CHECK(samePoint(m.position(Vertex::L5), vec(-one, -phi, z)));
}

TEST_CASE("every vertex has degree five and there are thirty edges") {
  const LabeledIcosahedron m = buildIcosahedron(GoldenRational(1));
  CHECK(m.edges().size() == 30);
  CHECK(std::is_sorted(m.edges().begin(), m.edges().end()));
  for (int v = 0; v < geowind::kVertexCount; ++v) {
    CHECK(m.neighbors(static_cast<Vertex>(v)).size() == 5);
  }
}

TEST_CASE("all 66 vertex pairs fall into the three exact distance classes") {
  const LabeledIcosahedron m = buildIcosahedron(GoldenRational(1));
  const GoldenRational sqEdge = m.sqEdgeLength();
  const GoldenRational phi = GoldenRational::phi();
  const GoldenRational sqSecond = phi * phi * sqEdge;
  const GoldenRational sqAntipodal = (phi + 2) * sqEdge;
  int edges = 0, seconds = 0, antipodals = 0;
  for (int a = 0; a < geowind::kVertexCount; ++a) {
    for (int b = a + 1; b < geowind::kVertexCount; ++b) {
      const GoldenRational d = squaredDistance(
          m.position(static_cast<Vertex>(a)), m.position(static_cast<Vertex>(b)));
      if (d == sqEdge) {
        ++edges;
      } else if (d == sqSecond) {
        ++seconds;
      } else if (d == sqAntipodal) {
        ++antipodals;
      } else {
        FAIL(("unexpected squared distance " + d.toString()));
      }
    }
  }
  CHECK(edges == 30);
  CHECK(seconds == 30);
  CHECK(antipodals == 6);
}

TEST_CASE("pole-to-opposite-ring distances equal the diagonal class") {
  const LabeledIcosahedron m = buildIcosahedron(GoldenRational::rational(7, 3));
  const GoldenRational expected =
      GoldenRational::phi() * GoldenRational::phi() * m.sqEdgeLength();
  for (int i = 1; i <= 5; ++i) {
    CHECK(squaredDistance(m.position(Vertex::S),
                          m.position(geowind::upperVertex(i))) == expected);
    CHECK(squaredDistance(m.position(Vertex::N),
                          m.position(geowind::lowerVertex(i))) == expected);
  }
}

TEST_CASE("ring adjacency matches the labeling contract") {
  const LabeledIcosahedron m = buildIcosahedron(GoldenRational(1));
  CHECK_FALSE(m.adjacent(Vertex::N, Vertex::S));
  for (int i = 1; i <= 5; ++i) {
    const Vertex ui = geowind::upperVertex(i);
    const Vertex li = geowind::lowerVertex(i);
    CHECK(m.adjacent(Vertex::N, ui));
    CHECK(m.adjacent(Vertex::S, li));
    CHECK_FALSE(m.adjacent(Vertex::N, li));
    CHECK_FALSE(m.adjacent(Vertex::S, ui));
    CHECK(m.adjacent(ui, geowind::upperVertex(i + 1)));
    CHECK(m.adjacent(li, geowind::lowerVertex(i + 1)));
    CHECK(m.adjacent(ui, li));
    CHECK(m.adjacent(ui, geowind::lowerVertex(i - 1)));
    CHECK_FALSE(m.adjacent(ui, geowind::upperVertex(i + 2)));
    CHECK_FALSE(m.adjacent(ui, geowind::lowerVertex(i + 2)));
  }
}

TEST_CASE("rings are antipodal: L_i = -U_{i+3}") {
  const LabeledIcosahedron m = buildIcosahedron(GoldenRational(2));
  for (int i = 1; i <= 5; ++i) {
    const ExactVec3 li = m.position(geowind::lowerVertex(i));
    const ExactVec3 ui3 = m.position(geowind::upperVertex(i + 3));
    CHECK(samePoint(li, -ui3));
  }
}

TEST_CASE("positions scale linearly with edge length") {
  const LabeledIcosahedron unit = buildIcosahedron(GoldenRational(1));
  const GoldenRational s = GoldenRational::rational(7, 3);
  const LabeledIcosahedron scaled = buildIcosahedron(s);
  for (int v = 0; v < geowind::kVertexCount; ++v) {
    const auto vert = static_cast<Vertex>(v);
    CHECK(samePoint(scaled.position(vert), unit.position(vert) * s));
  }
}

TEST_CASE("edge naming and normalization") {
  const Edge e(Vertex::L2, Vertex::U2);
  CHECK(e.name() == "U2-L2");
  CHECK(e == Edge(Vertex::U2, Vertex::L2));
  CHECK(geowind::vertexName(Vertex::N) == "N");
  CHECK(geowind::vertexName(Vertex::L5) == "L5");
}

TEST_CASE("relabeling a rigidly moved vertex set is congruent") {
  const LabeledIcosahedron m = buildIcosahedron(GoldenRational(2));

  // cyclic coordinate rotation (x,y,z) -> (y,z,x) maps the vertex family to
  // itself but moves the poles
  const auto rotate = [](const ExactVec3& p) {
    return ExactVec3(p.y(), p.z(), p.x());
  };
  // reflection (x,y,z) -> (-x,y,z) also preserves the vertex family
  const auto reflect = [](const ExactVec3& p) {
    return ExactVec3(-p.x(), p.y(), p.z());
  };

  for (int variant = 0; variant < 2; ++variant) {
    std::vector<ExactVec3> moved;
    for (int v = 0; v < geowind::kVertexCount; ++v) {
      const ExactVec3& p = m.position(static_cast<Vertex>(v));
      moved.push_back(variant == 0 ? rotate(p) : reflect(p));
    }
    const ExactVec3 north = variant == 0 ? rotate(m.position(Vertex::N))
                                         : reflect(m.position(Vertex::N));
    const ExactVec3 south = variant == 0 ? rotate(m.position(Vertex::S))
                                         : reflect(m.position(Vertex::S));
    const auto labeled =
        geowind::detail::assignLabels(moved, north, south, m.sqEdgeLength());
    // congruence: all pairwise distances agree label-for-label
    for (int a = 0; a < geowind::kVertexCount; ++a) {
      for (int b = a + 1; b < geowind::kVertexCount; ++b) {
        CHECK(squaredDistance(labeled[a], labeled[b]) ==
              squaredDistance(m.position(static_cast<Vertex>(a)),
                              m.position(static_cast<Vertex>(b))));
      }
    }
  }
}

TEST_CASE("labeling rejects malformed vertex sets") {
  const LabeledIcosahedron m = buildIcosahedron(GoldenRational(2));
  std::vector<ExactVec3> pts;
  for (int v = 0; v < geowind::kVertexCount; ++v) {
    pts.push_back(m.position(static_cast<Vertex>(v)));
  }

  SUBCASE("duplicated vertex") {
    pts[5] = pts[4];
    CHECK_THROWS_AS(geowind::detail::assignLabels(pts, pts[0], pts[1],
                                                  m.sqEdgeLength()),
                    geowind::LabelingInfeasible);
  }
  SUBCASE("wrong squared edge length") {
    CHECK_THROWS_AS(
        geowind::detail::assignLabels(pts, pts[0], pts[1], GoldenRational(3)),
        geowind::LabelingInfeasible);
  }
  SUBCASE("north not a vertex") {
    const ExactVec3 bogus =
        vec(GoldenRational(9), GoldenRational(9), GoldenRational(9));
    CHECK_THROWS_AS(
        geowind::detail::assignLabels(pts, bogus, pts[1], m.sqEdgeLength()),
        geowind::LabelingInfeasible);
  }
  SUBCASE("poles adjacent rather than antipodal") {
    // N paired with one of its own neighbors cannot satisfy the frame
    CHECK_THROWS_AS(geowind::detail::assignLabels(pts, pts[0], pts[2],
                                                  m.sqEdgeLength()),
                    geowind::LabelingInfeasible);
  }
  SUBCASE("wrong point count") {
    pts.pop_back();
    CHECK_THROWS_AS(geowind::detail::assignLabels(pts, pts[0], pts[1],
                                                  m.sqEdgeLength()),
                    geowind::LabelingInfeasible);
  }
}

TEST_CASE("nonpositive edge lengths are rejected") {
  CHECK_THROWS_AS(buildIcosahedron(GoldenRational(0)),
                  geowind::NonPositiveEdgeLength);
  CHECK_THROWS_AS(buildIcosahedron(GoldenRational(-1)),
                  geowind::NonPositiveEdgeLength);
  CHECK_THROWS_AS(buildIcosahedron(GoldenRational::rational(-7, 3)),
                  geowind::NonPositiveEdgeLength);
  try {
    buildIcosahedron(GoldenRational(0));
    FAIL("expected NonPositiveEdgeLength");
  } catch (const geowind::NonPositiveEdgeLength& e) {
    CHECK(std::string(e.what()).find("NonPositiveEdgeLength") !=
          std::string::npos);
  }
}
