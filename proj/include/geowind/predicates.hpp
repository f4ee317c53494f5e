#ifndef GEOWIND_PREDICATES_HPP
#define GEOWIND_PREDICATES_HPP

#include <array>

#include "geowind/vec.hpp"

namespace geowind {

using Triangle = std::array<ExactVec3, 3>;

/// True iff the open (relative) interiors of the two triangles share a
/// point. Shared vertices, shared edges and any other boundary-only contact
/// are classified as non-intersections. Degenerate (collinear) triangles
/// have empty interiors and never intersect anything.
///
/// Decided exactly: plane sidedness via orient3d, in-plane work via orient2d
/// after dropping the dominant axis of the relevant normal, and the
/// cross-plane case via exact interval overlap along the common line of the
/// two supporting planes.
bool triangleInteriorsIntersect(const Triangle& t1, const Triangle& t2);

namespace detail {

/// Index of the component of largest magnitude (0, 1 or 2; smallest index
/// wins ties), compared exactly on squares.
int dominantAxis(const ExactVec3& v);

/// Drops coordinate `axis`, preserving the cyclic order of the remaining
/// two (x,y,z -> drop z: (x,y); drop y: (z,x); drop x: (y,z)).
ExactVec2 dropAxis(const ExactVec3& p, int axis);

}  // namespace detail

}  // namespace geowind

#endif  // GEOWIND_PREDICATES_HPP
