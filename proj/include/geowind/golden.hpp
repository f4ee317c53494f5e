#ifndef GEOWIND_GOLDEN_HPP
#define GEOWIND_GOLDEN_HPP

#include <compare>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace geowind {

/// Exact element of the quadratic field Q(sqrt5): the real number
/// a + b*sqrt5 with rational coefficients a, b.
///
/// Both coefficients are kept in canonical reduced form (GMP rationals in
/// lowest terms, positive denominator), so the representation is unique and
/// equality is structural. The type is closed under +, -, *, / and carries
/// an exact sign, which is all the downstream geometry needs; there is no
/// square-root operation.
class GoldenRational {
 public:
  GoldenRational() : a_(0), b_(0) {}

  /// Integers embed as a + 0*sqrt5. Implicit so that small literals read
  /// naturally in expressions (g + 1, scalar zero/one inside Eigen).
  GoldenRational(long n) : a_(n), b_(0) {}  // NOLINT(google-explicit-constructor)

  GoldenRational(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  /// num/den + 0*sqrt5.
  static GoldenRational rational(long num, long den) {
    return GoldenRational(mpq_class(num, den), mpq_class(0));
  }

  static GoldenRational rational(mpq_class q) {
    return GoldenRational(std::move(q), mpq_class(0));
  }

  /// The golden ratio (1 + sqrt5)/2, the unique positive root of x^2 = x + 1.
  static GoldenRational phi() {
    return GoldenRational(mpq_class(1, 2), mpq_class(1, 2));
  }

  static GoldenRational sqrt5() {
    return GoldenRational(mpq_class(0), mpq_class(1));
  }

  /// Coefficient of 1.
  const mpq_class& rationalPart() const { return a_; }
  /// Coefficient of sqrt5.
  const mpq_class& radicalPart() const { return b_; }

  bool isZero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool isRational() const { return sgn(b_) == 0; }

  /// Exact sign of the real value a + b*sqrt5 in {-1, 0, +1}. When a and b
  /// have opposite signs the magnitudes are compared via a^2 against 5 b^2,
  /// which is exact; no floating point is involved.
  int sign() const;

  /// Nearest double to the real value. Evaluated through 256-bit MPFR with
  /// round-to-nearest at every step, so the result is the correctly rounded
  /// double for every input arising in practice. Used only at export and
  /// report boundaries.
  double toDouble() const;

  /// Canonical serialization "p/q + r/s*sqrt5", lowest terms, sign on the
  /// numerator, denominators always explicit: phi/2 prints as
  /// "1/4 + 1/4*sqrt5".
  std::string toString() const;

  /// Multiplicative inverse; throws std::domain_error on zero.
  GoldenRational inverse() const;

  friend GoldenRational operator+(const GoldenRational& x, const GoldenRational& y) {
    return GoldenRational(mpq_class(x.a_ + y.a_), mpq_class(x.b_ + y.b_));
  }
  friend GoldenRational operator-(const GoldenRational& x, const GoldenRational& y) {
    return GoldenRational(mpq_class(x.a_ - y.a_), mpq_class(x.b_ - y.b_));
  }
  friend GoldenRational operator-(const GoldenRational& x) {
    return GoldenRational(mpq_class(-x.a_), mpq_class(-x.b_));
  }

  /// Exact product using sqrt5 * sqrt5 = 5:
  /// (a1 a2 + 5 b1 b2) + (a1 b2 + a2 b1) sqrt5.
  friend GoldenRational operator*(const GoldenRational& x, const GoldenRational& y) {
    return GoldenRational(mpq_class(x.a_ * y.a_ + 5 * x.b_ * y.b_),
                          mpq_class(x.a_ * y.b_ + x.b_ * y.a_));
  }

  friend GoldenRational operator/(const GoldenRational& x, const GoldenRational& y) {
    return x * y.inverse();
  }

  GoldenRational& operator+=(const GoldenRational& y) { return *this = *this + y; }
  GoldenRational& operator-=(const GoldenRational& y) { return *this = *this - y; }
  GoldenRational& operator*=(const GoldenRational& y) { return *this = *this * y; }
  GoldenRational& operator/=(const GoldenRational& y) { return *this = *this / y; }

  friend bool operator==(const GoldenRational& x, const GoldenRational& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const GoldenRational& x, const GoldenRational& y) {
    return !(x == y);
  }

  /// Order of the underlying real numbers, decided exactly.
  friend std::strong_ordering operator<=>(const GoldenRational& x, const GoldenRational& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class a_, b_;
};

inline int sign(const GoldenRational& x) { return x.sign(); }

}  // namespace geowind

#endif  // GEOWIND_GOLDEN_HPP
