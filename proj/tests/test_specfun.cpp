#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "kgring/quadrature.hpp"
#include "kgring/specfun.hpp"

using namespace kgring;
using namespace kgring::specfun;

TEST_CASE("ln_gamma pins and recursion oracle") {
  CHECK(ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(ln_gamma(0.5) == doctest::Approx(0.5 * std::log(std::acos(-1.0))).epsilon(1e-14));
  // Gamma(x+1) = x Gamma(x), climbed from Gamma(0.5) = sqrt(pi)
  double expected = 0.5 * std::log(std::acos(-1.0));
  for (double x = 0.5; x < 7.4; x += 1.0) expected += std::log(x);
  CHECK(ln_gamma(7.5) == doctest::Approx(expected).epsilon(1e-13));
  CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(ln_gamma(-2.0), std::domain_error);
}

TEST_CASE("laguerre low-degree pins") {
  CHECK(laguerre(0, 0.7, 3.1) == doctest::Approx(1.0));
  CHECK(laguerre(1, 0.5, 2.0) == doctest::Approx(-0.5));  // 1 + a - x
  CHECK_THROWS_AS(laguerre(2, -1.0, 1.0), std::domain_error);
}

TEST_CASE("laguerre matches Rodrigues oracle") {
  // frozen grid: n <= 8, a in {0, 0.5, 1.5}, x in {0.1, 1, 5}
  for (int n = 0; n <= 8; ++n)
    for (double a : {0.0, 0.5, 1.5})
      for (double x : {0.1, 1.0, 5.0}) {
        double ref = rodrigues_oracle(RodriguesKind::laguerre, n, a, x);
        CHECK(laguerre(n, a, x) ==
              doctest::Approx(ref).epsilon(1e-10).scale(std::max(1.0, std::abs(ref))));
      }
  // the spec-pinned single case
  double ref3 = rodrigues_oracle(RodriguesKind::laguerre, 3, 0.5, 1.0);
  CHECK(laguerre(3, 0.5, 1.0) == doctest::Approx(ref3).epsilon(1e-12));
}

TEST_CASE("jacobi low-degree pins and oracle") {
  CHECK(jacobi(0, 1.2, 1.2, 0.3) == doctest::Approx(1.0));
  CHECK(jacobi(1, 2.0, 2.0, 0.5) == doctest::Approx(1.5));  // (a+1) x
  CHECK_THROWS_AS(jacobi(2, -1.5, 0.0, 0.0), std::domain_error);

  double ref = rodrigues_oracle(RodriguesKind::jacobi_symmetric, 2, 1.0, 0.5);
  CHECK(jacobi(2, 1.0, 1.0, 0.5) == doctest::Approx(ref).epsilon(1e-12));

  for (int n = 0; n <= 8; ++n)
    for (double a : {0.0, 0.5, 1.5})
      for (double x : {-0.9, -0.3, 0.1, 0.7}) {
        double r = rodrigues_oracle(RodriguesKind::jacobi_symmetric, n, a, x);
        CHECK(jacobi(n, a, a, x) ==
              doctest::Approx(r).epsilon(1e-10).scale(std::max(1.0, std::abs(r))));
      }
}

TEST_CASE("rodrigues oracle basics") {
  CHECK(rodrigues_oracle(RodriguesKind::laguerre, 0, 4.2, 0.77) == doctest::Approx(1.0));
  CHECK(rodrigues_oracle(RodriguesKind::jacobi_symmetric, 0, 4.2, 0.77) == doctest::Approx(1.0));
  CHECK_THROWS_AS(rodrigues_oracle(RodriguesKind::laguerre, 13, 0.0, 1.0), std::domain_error);
}

TEST_CASE("symmetric jacobi parity is exact under the recurrence") {
  for (int n = 0; n <= 9; ++n)
    for (double a : {0.3, 1.0, 2.7})
      for (double x : {0.11, 0.45, 0.83}) {
        double sign = (n % 2 == 0) ? 1.0 : -1.0;
        CHECK(jacobi(n, a, a, -x) == sign * jacobi(n, a, a, x));
      }
}

TEST_CASE("laguerre orthogonality by quadrature") {
  // truncation at x = 80 discards < 1e-12 of the integral for these orders;
  // the substitution x = t^2 removes the x^a endpoint singularity so the
  // Gauss rule converges spectrally
  const double a = 0.5;
  auto ip = [&](int m, int n) {
    return quad::integrate(
        [&](double t) {
          double x = t * t;
          return 2.0 * t * std::pow(x, a) * std::exp(-x) * laguerre(m, a, x) *
                 laguerre(n, a, x);
        },
        0.0, std::sqrt(80.0), 400);
  };
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n < m; ++n) CHECK(std::abs(ip(m, n)) < 1e-8);
  // diagonal sanity: ||L_n||^2 = Gamma(n+a+1)/n!
  double d2 = ip(2, 2);
  double expect = std::exp(ln_gamma(2.0 + a + 1.0)) / 2.0;
  CHECK(d2 == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("jacobi orthogonality by quadrature") {
  const double a = 1.3;
  auto ip = [&](int m, int n) {
    return quad::integrate(
        [&](double x) {
          return std::pow(1.0 - x * x, a) * jacobi(m, a, a, x) * jacobi(n, a, a, x);
        },
        -1.0, 1.0, 400);
  };
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n < m; ++n) CHECK(std::abs(ip(m, n)) < 1e-8);
}
