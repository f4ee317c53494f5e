#ifndef GEOWIND_VALIDATE_HPP
#define GEOWIND_VALIDATE_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geowind/wing_set.hpp"

namespace geowind {

// Every check returns structured pass/fail data; failure is never an
// exception, so one run can report all failing checks together.

struct DuplicateEdge {
  Edge edge;
  std::string face_a, face_b;
};

struct EdgeCheck {
  bool pass = false;
  std::vector<DuplicateEdge> duplicate_pairs;
};

struct FaceShapeResult {
  std::string face;
  // sq_sides[i] is the squared side opposite corner i; corner 0 is the pole,
  // so sq_sides[0] is the squared cross-edge and cos_angles[0] the pole
  // angle cosine. cos_angles is absent when a cosine is not exactly
  // representable in the field (possible only for faces that already fail
  // the side check).
  std::array<GoldenRational, 3> sq_sides;
  std::optional<std::array<GoldenRational, 3>> cos_angles;
  std::array<double, 3> angles_deg_float{};
  bool pass = false;
};

struct ShapeCheck {
  bool pass = false;
  std::vector<FaceShapeResult> per_face;
};

struct DecagonCheck {
  bool pass = false;
  bool coplanar = false;       // every midpoint exactly on the equatorial plane
  bool radius_equal = false;   // every squared norm equals phi^2 l^2 / 4
  bool spacing_equal = false;  // every adjacent pair at exact cosine phi/2
  bool interlaced = false;     // south/north faces alternate around the circle
  GoldenRational sq_radius;    // phi^2 l^2 / 4
  double radius_float = 0.0;
  GoldenRational adjacent_cos;  // phi/2
  double spacing_deg_float = 0.0;
  std::vector<std::string> angular_order;
};

struct MaximalityCheck {
  bool pass = false;
  int max_per_south = 0, max_per_north = 0, max_total = 0;
  int candidates_south = 0, candidates_north = 0;
  // Same search without the golden-gnomon shape constraint on candidates;
  // informational only, never part of pass.
  int unconstrained_per_south = 0, unconstrained_per_north = 0,
      unconstrained_total = 0;
};

struct OverlapPair {
  std::string face_a, face_b;
};

struct IntersectionCheck {
  bool pass = false;
  int pairs_tested = 0;
  std::vector<OverlapPair> offending_pairs;
};

struct ValidationReport {
  EdgeCheck edge_check;
  ShapeCheck shape_check;
  DecagonCheck decagon_check;
  MaximalityCheck maximality_check;
  IntersectionCheck intersection_check;
  bool overall = false;
};

/// The 30 edge slots across the ten faces must hold 30 distinct unordered
/// vertex pairs; duplicates are listed with both owning faces.
EdgeCheck checkEdgeDisjoint(const WingSet& ws);

/// Each face must have exact squared sides {l^2, l^2, phi^2 l^2} and exact
/// angle cosines {phi/2, phi/2, (1-phi)/2}, with the 36-degree angle (cosine
/// phi/2) at the pole corner.
ShapeCheck checkFaceShapes(const LabeledIcosahedron& model, const WingSet& ws);

/// Cross-edge midpoint tagged with its originating face, for the decagon
/// check.
struct DecagonPoint {
  ExactVec3 point;
  Pole pole;
  std::string face;
};

/// Decagon test on arbitrary points: exact coplanarity with the equator
/// (normal `axis` through the origin), exact squared radius phi^2 l^2 / 4,
/// exact adjacent cosine phi/2 once sorted by angle, and pole alternation.
/// Sorting uses float angles as a heuristic only; every pass criterion is
/// decided exactly.
DecagonCheck checkDecagonPoints(std::span<const DecagonPoint> points,
                                const ExactVec3& axis,
                                const GoldenRational& sqEdgeLength);

DecagonCheck checkDecagon(const LabeledIcosahedron& model, const WingSet& ws);

/// Pole-anchored candidate triangle for the maximality search.
struct CandidateTriangle {
  Pole pole;
  std::array<Vertex, 3> vertices;  // pole vertex first

  std::array<Edge, 3> edges() const {
    return {Edge(vertices[0], vertices[1]), Edge(vertices[1], vertices[2]),
            Edge(vertices[2], vertices[0])};
  }
};

/// All triangles (pole, x, y) over distinct ring vertices whose exact
/// squared side multiset is the golden gnomon's {l^2, l^2, phi^2 l^2}.
/// Deterministic order (ring label order, x < y).
std::vector<CandidateTriangle> gnomonCandidates(const LabeledIcosahedron& model,
                                                Pole pole);

/// All 45 triangles (pole, x, y) over distinct ring vertices, no shape
/// constraint.
std::vector<CandidateTriangle> poleAnchoredCandidates(
    const LabeledIcosahedron& model, Pole pole);

/// Size of a maximum edge-disjoint subset, by exhaustive branch-and-bound.
/// The result is independent of candidate order.
int maxEdgeDisjointSubset(std::span<const CandidateTriangle> candidates);

/// Exhaustive maximality search: 5 per pole and 10 jointly must be the
/// maxima over gnomon candidates.
MaximalityCheck checkMaximality(const LabeledIcosahedron& model);

/// Exact open-interior overlap test over all face pairs; boundary contact
/// (shared vertices or edges) does not count.
IntersectionCheck checkNonIntersection(const LabeledIcosahedron& model,
                                       const WingSet& ws);

/// Runs every check and aggregates; overall is the conjunction.
ValidationReport runAll(const LabeledIcosahedron& model, const WingSet& ws);

namespace detail {

/// Exact square root within the field when one exists: returns y >= 0 with
/// y*y == x, or nullopt when x is negative or not a perfect square in
/// Q(sqrt5). Used to form exact law-of-cosines denominators; deliberately
/// not part of the field type's own surface.
std::optional<GoldenRational> exactSqrt(const GoldenRational& x);

}  // namespace detail

}  // namespace geowind

#endif  // GEOWIND_VALIDATE_HPP
