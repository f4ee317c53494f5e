#include "geowind/predicates.hpp"

#include <cassert>
#include <optional>

namespace geowind {

namespace {

bool isZeroVec(const ExactVec3& v) {
  return v.x().isZero() && v.y().isZero() && v.z().isZero();
}

}  // namespace

namespace detail {

int dominantAxis(const ExactVec3& v) {
  const GoldenRational sx = v.x() * v.x();
  const GoldenRational sy = v.y() * v.y();
  const GoldenRational sz = v.z() * v.z();
  int axis = 0;
  GoldenRational best = sx;
  if (sy > best) {
    axis = 1;
    best = sy;
  }
  if (sz > best) {
    axis = 2;
  }
  return axis;
}

ExactVec2 dropAxis(const ExactVec3& p, int axis) {
  switch (axis) {
    case 0:
      return {p.y(), p.z()};
    case 1:
      return {p.z(), p.x()};
    default:
      return {p.x(), p.y()};
  }
}

namespace {

struct Interval {
  // Open interval (lo, hi) of the line parameter; unbounded ends absent.
  std::optional<GoldenRational> lo, hi;
  bool empty = false;

  // Intersect with the open half-line {t : slope*t + offset > 0}.
  void clip(const GoldenRational& slope, const GoldenRational& offset) {
    if (empty) return;
    const int s = slope.sign();
    if (s == 0) {
      if (offset.sign() <= 0) empty = true;
      return;
    }
    const GoldenRational bound = -offset / slope;
    if (s > 0) {
      if (!lo || bound > *lo) lo = bound;
    } else {
      if (!hi || bound < *hi) hi = bound;
    }
    if (lo && hi && !(*lo < *hi)) empty = true;
  }
};

bool openOverlap(const Interval& p, const Interval& q) {
  if (p.empty || q.empty) return false;
  std::optional<GoldenRational> lo = p.lo, hi = p.hi;
  if (q.lo && (!lo || *q.lo > *lo)) lo = q.lo;
  if (q.hi && (!hi || *q.hi < *hi)) hi = q.hi;
  if (lo && hi) return *lo < *hi;
  return true;
}

// Open interval of the line point0 + t*dir (projected to 2D along `axis`)
// inside the open triangle tri (also projected along `axis`). Empty when
// the projected triangle is degenerate, which cannot happen when `axis` is
// the dominant axis of tri's normal.
Interval lineInsideTriangle(const Triangle& tri, const ExactVec3& point0,
                            const ExactVec3& dir, int axis) {
  const ExactVec2 a = dropAxis(tri[0], axis);
  const ExactVec2 b = dropAxis(tri[1], axis);
  const ExactVec2 c = dropAxis(tri[2], axis);
  const ExactVec2 p0 = dropAxis(point0, axis);
  const ExactVec2 d = dropAxis(dir, axis);

  const int orientation = orient2d(a, b, c);
  Interval out;
  if (orientation == 0) {
    out.empty = true;
    return out;
  }
  const GoldenRational o(orientation);

  const ExactVec2 verts[3] = {a, b, c};
  for (int i = 0; i < 3 && !out.empty; ++i) {
    const ExactVec2& p = verts[i];
    const ExactVec2& q = verts[(i + 1) % 3];
    // orient2d(p, q, p0 + t d) is linear in t.
    const GoldenRational slope =
        o * ((q.x() - p.x()) * d.y() - (q.y() - p.y()) * d.x());
    const GoldenRational offset =
        o * ((q.x() - p.x()) * (p0.y() - p.y()) - (q.y() - p.y()) * (p0.x() - p.x()));
    out.clip(slope, offset);
  }
  return out;
}

// Both triangles lie in one plane with normal n: strict 2D separating-axis
// test over the six edge lines. Interiors are disjoint iff some edge line
// of one triangle has the entire other triangle in the closed opposite
// half-plane, so boundary contact never counts as an intersection.
bool coplanarInteriorsIntersect(const Triangle& t1, const Triangle& t2,
                                const ExactVec3& n) {
  const int axis = dominantAxis(n);
  ExactVec2 p1[3], p2[3];
  for (int i = 0; i < 3; ++i) {
    p1[i] = dropAxis(t1[i], axis);
    p2[i] = dropAxis(t2[i], axis);
  }

  const auto separatedByEdge = [](const ExactVec2 own[3], const ExactVec2 other[3]) {
    const int orientation = orient2d(own[0], own[1], own[2]);
    assert(orientation != 0);
    for (int i = 0; i < 3; ++i) {
      const ExactVec2& p = own[i];
      const ExactVec2& q = own[(i + 1) % 3];
      bool allOutside = true;
      for (int j = 0; j < 3 && allOutside; ++j) {
        allOutside = orientation * orient2d(p, q, other[j]) <= 0;
      }
      if (allOutside) return true;
    }
    return false;
  };

  return !separatedByEdge(p1, p2) && !separatedByEdge(p2, p1);
}

}  // namespace

}  // namespace detail

bool triangleInteriorsIntersect(const Triangle& t1, const Triangle& t2) {
  using detail::dominantAxis;

  const ExactVec3 n1 = (t1[1] - t1[0]).cross(t1[2] - t1[0]);
  const ExactVec3 n2 = (t2[1] - t2[0]).cross(t2[2] - t2[0]);
  if (isZeroVec(n1) || isZeroVec(n2)) return false;  // degenerate: empty interior

  // Sides of t2's vertices relative to plane(t1).
  int s2[3], s1[3];
  int neg2 = 0, pos2 = 0, zero2 = 0;
  for (int i = 0; i < 3; ++i) {
    s2[i] = orient3d(t1[0], t1[1], t1[2], t2[i]);
    neg2 += s2[i] < 0;
    pos2 += s2[i] > 0;
    zero2 += s2[i] == 0;
  }
  if (zero2 == 3) return detail::coplanarInteriorsIntersect(t1, t2, n1);
  // All on one closed side: int(t2) stays strictly off plane(t1), so it
  // cannot reach int(t1).
  if (neg2 == 0 || pos2 == 0) return false;

  int neg1 = 0, pos1 = 0;
  for (int i = 0; i < 3; ++i) {
    s1[i] = orient3d(t2[0], t2[1], t2[2], t1[i]);
    neg1 += s1[i] < 0;
    pos1 += s1[i] > 0;
  }
  if (neg1 == 0 || pos1 == 0) return false;

  // Both triangles straddle the other's plane; the planes are distinct and
  // non-parallel, and any interior-interior point lies on their common line.
  const ExactVec3 dir = n1.cross(n2);
  assert(!isZeroVec(dir));

  // One point of the line: set the dominant-axis coordinate of dir to zero
  // and solve the remaining 2x2 system {n1.x = c1, n2.x = c2} by Cramer.
  const int k = dominantAxis(dir);
  const int i = (k + 1) % 3;
  const int j = (k + 2) % 3;
  const GoldenRational c1 = n1.dot(t1[0]);
  const GoldenRational c2 = n2.dot(t2[0]);
  const GoldenRational det = n1[i] * n2[j] - n1[j] * n2[i];
  assert(det.sign() != 0);
  ExactVec3 point0;
  point0[k] = GoldenRational(0);
  point0[i] = (c1 * n2[j] - c2 * n1[j]) / det;
  point0[j] = (n1[i] * c2 - n2[i] * c1) / det;

  const detail::Interval i1 =
      detail::lineInsideTriangle(t1, point0, dir, dominantAxis(n1));
  const detail::Interval i2 =
      detail::lineInsideTriangle(t2, point0, dir, dominantAxis(n2));
  return detail::openOverlap(i1, i2);
}

}  // namespace geowind
