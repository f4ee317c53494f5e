#include "doctest.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "geowind/golden.hpp"

using geowind::GoldenRational;

namespace {

GoldenRational smallRandom(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 20);
  return GoldenRational(mpq_class(num(rng), den(rng)),
                        mpq_class(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("phi satisfies its defining quadratic") {
  const GoldenRational phi = GoldenRational::phi();
  CHECK(phi * phi == phi + 1);
  CHECK(phi * phi - phi - 1 == GoldenRational(0));
  // 2 phi - 1 = sqrt5
  CHECK(2 * phi - 1 == GoldenRational::sqrt5());
  CHECK(GoldenRational::sqrt5() * GoldenRational::sqrt5() == GoldenRational(5));
}

TEST_CASE("phi powers follow the Fibonacci recurrence") {
  // phi^n = F(n) phi + F(n-1)
  const std::array<long, 12> fib{0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
  const GoldenRational phi = GoldenRational::phi();
  GoldenRational power = phi;
  for (int n = 1; n <= 10; ++n) {
    CHECK(power == fib[n] * phi + fib[n - 1]);
    power = power * phi;
  }
}

TEST_CASE("inverse and golden identities") {
  const GoldenRational phi = GoldenRational::phi();
  CHECK(phi.inverse() == phi - 1);
  CHECK(phi.inverse() * phi == GoldenRational(1));
  CHECK((1 / phi) == phi - 1);
  CHECK_THROWS_AS(GoldenRational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(phi / GoldenRational(0), std::domain_error);
}

TEST_CASE("sign handles cancellation between rational and radical parts") {
  const GoldenRational sqrt5 = GoldenRational::sqrt5();
  CHECK((GoldenRational(7) - 3 * sqrt5).sign() > 0);   // 49 > 45
  CHECK((GoldenRational(2) - sqrt5).sign() < 0);       // 4 < 5
  CHECK((3 * sqrt5 - 7).sign() < 0);
  CHECK((GoldenRational::rational(9, 4) - sqrt5).sign() > 0);  // 81/16 > 5
  CHECK(GoldenRational(0).sign() == 0);
  CHECK((sqrt5 - sqrt5).sign() == 0);
  CHECK(GoldenRational::rational(-1, 1000000).sign() < 0);
}

TEST_CASE("total order is consistent") {
  const GoldenRational phi = GoldenRational::phi();
  CHECK(GoldenRational(1) < phi);
  CHECK(phi < GoldenRational(2));
  CHECK(phi * phi > phi);
  CHECK(GoldenRational::sqrt5() > GoldenRational(2));
  CHECK(GoldenRational(2) - GoldenRational::sqrt5() < GoldenRational(0));
  std::vector<GoldenRational> values{phi, GoldenRational(1), phi * phi,
                                     GoldenRational(0), -phi,
                                     GoldenRational::rational(3, 2)};
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i) {
    CHECK(values[i - 1] < values[i]);
  }
}

TEST_CASE("toDouble matches extended-precision reference values") {
  CHECK(GoldenRational::phi().toDouble() == 1.618033988749895);
  CHECK(GoldenRational::sqrt5().toDouble() == 2.23606797749979);
  const GoldenRational half = GoldenRational::rational(1, 2);
  CHECK((GoldenRational::phi() * half).toDouble() == 0.8090169943749475);
  const GoldenRational phi2 = GoldenRational::phi() * GoldenRational::phi();
  CHECK(phi2.toDouble() == 2.618033988749895);
  CHECK((phi2 * GoldenRational::rational(1, 4)).toDouble() ==
        0.6545084971874737);
  // Exact zero after heavy cancellation stays exactly zero.
  GoldenRational p10 = GoldenRational(1);
  for (int i = 0; i < 10; ++i) p10 = p10 * GoldenRational::phi();
  CHECK((p10 - 55 * GoldenRational::phi() - 34).toDouble() == 0.0);
  // Values beyond double's integer range round to nearest.
  GoldenRational big(1);
  for (int i = 0; i < 30; ++i) big = big * 10;
  CHECK(big.toDouble() == 1e30);
}

TEST_CASE("canonical strings") {
  const GoldenRational phi = GoldenRational::phi();
  CHECK((phi * GoldenRational::rational(1, 2)).toString() ==
        "1/4 + 1/4*sqrt5");
  CHECK(GoldenRational(2).toString() == "2");
  CHECK(GoldenRational::rational(-3, 2).toString() == "-3/2");
  CHECK(GoldenRational::rational(2, 4).toString() == "1/2");
  CHECK(GoldenRational::sqrt5().toString() == "1*sqrt5");
  CHECK(GoldenRational(0).toString() == "0");
  CHECK(GoldenRational(mpq_class(1, 4), mpq_class(-1, 4)).toString() ==
        "1/4 + -1/4*sqrt5");
  CHECK((phi * phi).toString() == "3/2 + 1/2*sqrt5");
}

TEST_CASE("constructor canonicalizes rationals") {
  const GoldenRational x(mpq_class(2, 4), mpq_class(-2, 8));
  CHECK(x.rationalPart() == mpq_class(1, 2));
  CHECK(x.radicalPart() == mpq_class(-1, 4));
  CHECK(x == GoldenRational(mpq_class(1, 2), mpq_class(-1, 4)));
}

TEST_CASE("field axioms hold on random samples") {
  std::mt19937 rng(20260819);
  for (int trial = 0; trial < 60; ++trial) {
    const GoldenRational x = smallRandom(rng);
    const GoldenRational y = smallRandom(rng);
    const GoldenRational z = smallRandom(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == GoldenRational(0));
    CHECK(x + 0 == x);
    CHECK(x * 1 == x);
    if (!y.isZero()) {
      CHECK((x * y) / y == x);
      CHECK(y * y.inverse() == GoldenRational(1));
    }
    // Exact sign agrees with the float sign away from the rounding floor.
    const double d = x.toDouble();
    if (std::abs(d) > 1e-12) {
      CHECK(x.sign() == (d > 0 ? 1 : -1));
    }
  }
}
