#ifndef GEOWIND_VEC_HPP
#define GEOWIND_VEC_HPP

#include <Eigen/Dense>

#include "geowind/golden.hpp"

namespace Eigen {

// GoldenRational is a plain ordered field scalar as far as Eigen is
// concerned. Everything we instantiate (sums, products, dot, cross, small
// determinants) stays inside ring operations, so no sqrt/abs support is
// declared.
template <>
struct NumTraits<geowind::GoldenRational> : GenericNumTraits<geowind::GoldenRational> {
  typedef geowind::GoldenRational Real;
  typedef geowind::GoldenRational NonInteger;
  typedef geowind::GoldenRational Nested;
  typedef geowind::GoldenRational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 120,
  };
  static inline Real epsilon() { return geowind::GoldenRational(0); }
  static inline Real dummy_precision() { return geowind::GoldenRational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace geowind {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;

/// 3-vector over Q(sqrt5); carries vertex coordinates, midpoints and axis
/// vectors with no rounding anywhere.
using ExactVec3 = Vec3<GoldenRational>;
using ExactVec2 = Vec2<GoldenRational>;

inline Vec3<double> toVec3d(const ExactVec3& v) {
  return {v.x().toDouble(), v.y().toDouble(), v.z().toDouble()};
}

inline GoldenRational squaredDistance(const ExactVec3& u, const ExactVec3& v) {
  return (u - v).squaredNorm();
}

inline ExactVec3 midpoint(const ExactVec3& u, const ExactVec3& v) {
  return (u + v) * GoldenRational::rational(1, 2);
}

/// Sign of det[b-a, c-a, d-a] in {-1, 0, +1}; zero exactly when the four
/// points are coplanar. Positive when d lies on the side of plane(a,b,c)
/// that makes (a,b,c,d) a positively oriented tetrahedron.
inline int orient3d(const ExactVec3& a, const ExactVec3& b, const ExactVec3& c,
                    const ExactVec3& d) {
  Mat3<GoldenRational> m;
  m.col(0) = b - a;
  m.col(1) = c - a;
  m.col(2) = d - a;
  return m.determinant().sign();
}

/// Sign of the 2D cross product det[b-a, c-a]: orientation of the triangle
/// (a, b, c) in the plane, zero iff collinear.
inline int orient2d(const ExactVec2& a, const ExactVec2& b, const ExactVec2& c) {
  const GoldenRational det =
      (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
  return det.sign();
}

}  // namespace geowind

#endif  // GEOWIND_VEC_HPP
