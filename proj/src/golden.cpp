#include "geowind/golden.hpp"

#include <stdexcept>

#include <mpfr.h>

namespace geowind {

int GoldenRational::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt5, i.e. a^2 vs 5 b^2. The comparison can
  // never tie for nonzero parts (sqrt5 is irrational).
  const int c = cmp(a_ * a_, 5 * b_ * b_);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

double GoldenRational::toDouble() const {
  mpfr_t acc, rad, coeff;
  mpfr_init2(acc, 256);
  mpfr_init2(rad, 256);
  mpfr_init2(coeff, 256);
  mpfr_set_q(acc, a_.get_mpq_t(), MPFR_RNDN);
  mpfr_sqrt_ui(rad, 5, MPFR_RNDN);
  mpfr_set_q(coeff, b_.get_mpq_t(), MPFR_RNDN);
  mpfr_fma(acc, coeff, rad, acc, MPFR_RNDN);  // acc = coeff*rad + acc
  const double out = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clear(acc);
  mpfr_clear(rad);
  mpfr_clear(coeff);
  return out;
}

std::string GoldenRational::toString() const {
  // Canonical form "p/q + r/s*sqrt5" in lowest terms, sign on the numerator;
  // zero terms are dropped ("3/2", "1/2*sqrt5", "0").
  if (sgn(b_) == 0) return a_.get_str();
  const std::string radical = b_.get_str() + "*sqrt5";
  if (sgn(a_) == 0) return radical;
  return a_.get_str() + " + " + radical;
}

GoldenRational GoldenRational::inverse() const {
  // 1/(a + b sqrt5) = (a - b sqrt5)/(a^2 - 5 b^2); the denominator vanishes
  // only for the zero element.
  const mpq_class norm = a_ * a_ - 5 * b_ * b_;
  if (sgn(norm) == 0) {
    throw std::domain_error("GoldenRational: division by zero element");
  }
  return GoldenRational(mpq_class(a_ / norm), mpq_class(-b_ / norm));
}

}  // namespace geowind
