#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "kgring/angular.hpp"
#include "kgring/quadrature.hpp"

using namespace kgring;
using namespace kgring::angular;

namespace {
const double pi = std::acos(-1.0);

QuantumNumbers qn3(int n_polar, int m) {
  QuantumNumbers q;
  q.n_polar = n_polar;
  q.m = m;
  return q;
}
}  // namespace

TEST_CASE("azimuthal wave") {
  CHECK(azimuthal_wave(0, 1.234).real() == doctest::Approx(1.0 / std::sqrt(2.0 * pi)));
  CHECK(azimuthal_wave(0, 1.234).imag() == doctest::Approx(0.0));
  CHECK(std::abs(azimuthal_wave(2, pi)) == doctest::Approx(1.0 / std::sqrt(2.0 * pi)));
  for (int m = -3; m <= 3; ++m)
    for (double phi : {0.0, 0.6, 2.5, 5.9}) {
      auto a = azimuthal_wave(m, phi);
      auto b = azimuthal_wave(m, phi + 2.0 * pi);
      CHECK(std::abs(a - b) < 1e-14);
    }
}

TEST_CASE("m_prime values") {
  CHECK(m_prime(2, 3, 1.0, 0.0) == doctest::Approx(2.0));
  CHECK(m_prime(1, 5, 1.0, 0.0) == doctest::Approx(2.0));  // 1 + (5-3)/2
  // alpha2^2 beta = 3 with l = 1: sqrt(1 + 3) = 2
  CHECK(m_prime(1, 3, 1.5, 2.0) == doctest::Approx(2.0));
}

TEST_CASE("effective_l integer reduction and ring shift") {
  auto s0 = effective_l(qn3(1, 1), 3, 1.0, 0.0);
  CHECK(s0.l_tilde == doctest::Approx(2.0));
  CHECK(s0.l_prime == doctest::Approx(2.0));
  CHECK(s0.lambda_l == doctest::Approx(6.0));

  // l' = n + sqrt(m^2 + alpha2^2 beta) = 0 + 2
  auto s1 = effective_l(qn3(0, 1), 3, 1.5, 2.0);
  CHECK(s1.m_prime == doctest::Approx(2.0));
  CHECK(s1.l_prime == doctest::Approx(2.0));

  // inverse relation: l' = -1/2 + sqrt((l~ + (D-2)/2)^2 + beta alpha2^2)
  for (double beta : {0.1, 0.5, 2.0})
    for (int D : {3, 4, 5}) {
      QuantumNumbers q;
      q.n_polar = 1;
      q.m = 1;
      q.cascade.assign(D - 3, 1);
      auto s = effective_l(q, D, 1.7, beta);
      double inv = -0.5 + std::sqrt(std::pow(s.l_tilde + 0.5 * (D - 2), 2) + beta * 1.7);
      CHECK(s.l_prime == doctest::Approx(inv).epsilon(1e-12));
      CHECK(s.l_prime - q.n_polar - s.m_prime == doctest::Approx(0.0));
      CHECK(s.lambda_l == doctest::Approx(s.l_tilde * (s.l_tilde + D - 2)).epsilon(1e-13));
    }
}

TEST_CASE("m_prime argument validation") {
  CHECK_THROWS_AS(m_prime(-1, 3, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(m_prime(0, 3, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(m_prime(0, 3, 1.0, -0.1), std::domain_error);
}

TEST_CASE("beta -> 0 continuity of effective_l") {
  QuantumNumbers q = qn3(1, 1);
  auto base = effective_l(q, 3, 1.3, 0.0);
  double prev = 1e300;
  for (double beta : {1e-3, 1e-4, 1e-5}) {
    auto s = effective_l(q, 3, 1.3, beta);
    CHECK(std::abs(s.l_tilde - base.l_tilde) < 2.0 * beta);  // |dl/dbeta| bounded
    CHECK(std::abs(s.l_tilde - base.l_tilde) < std::abs(prev - base.l_tilde) + 1e-15);
    prev = s.l_tilde;
  }
}

TEST_CASE("quantum number validation") {
  QuantumNumbers q;
  q.m = 2;
  q.cascade = {1};  // below |m|
  CHECK_THROWS_AS(q.validate(4), std::invalid_argument);
  q.cascade = {2, 1};  // decreasing
  CHECK_THROWS_AS(q.validate(5), std::invalid_argument);
  q.cascade = {2, 3};
  CHECK_NOTHROW(q.validate(5));
  CHECK(q.top_l(5) == 3);
  CHECK_THROWS_AS(q.validate(3), std::invalid_argument);  // cascade must be empty
}

TEST_CASE("cascade wave: n_j = 0 shape and normalization") {
  // n_j = 0: N (sin theta)^{l_prev} since P_0 = 1
  double N = cascade_norm_quadrature(2, 0, 1);
  CHECK(cascade_wave(2, 0, 1, 0.7) == doctest::Approx(N * std::sin(0.7)));
  for (int j : {2, 3})
    for (int nj : {0, 1, 2})
      for (int lp : {0, 1, 2}) {
        double I = quad::integrate(
            [&](double t) {
              double f = cascade_wave(j, nj, lp, t);
              return f * f * std::pow(std::sin(t), j - 1);
            },
            0.0, pi, 600);
        CHECK(I == doctest::Approx(1.0).epsilon(1e-8));
      }
  CHECK_THROWS_AS(cascade_wave(1, 0, 0, 0.5), std::out_of_range);
}

TEST_CASE("cascade orthogonality at fixed channel") {
  for (int lp : {0, 1}) {
    double I = quad::integrate(
        [&](double t) {
          return cascade_wave(2, 0, lp, t) * cascade_wave(2, 1, lp, t) * std::sin(t);
        },
        0.0, pi, 600);
    CHECK(std::abs(I) < 1e-8);
  }
}

TEST_CASE("printed cascade norm vs quadrature norm") {
  // the printed closed form does not square with the quadrature value in
  // general; both are exposed, quadrature is authoritative
  double nq = cascade_norm_quadrature(2, 1, 1);
  double np = cascade_norm_printed(2, 1, 1);
  CHECK(nq > 0.0);
  CHECK(np > 0.0);
}

TEST_CASE("polar wave: normalization and orthogonality") {
  for (double beta : {0.0, 0.5})
    for (int D : {3, 4}) {
      QuantumNumbers q;
      q.m = 1;
      q.cascade.assign(D - 3, 1);
      for (int np = 0; np <= 2; ++np) {
        q.n_polar = np;
        auto s = effective_l(q, D, 1.5, beta);
        double I = quad::integrate(
            [&](double t) {
              double f = polar_wave(np, s, D, t);
              return f * f * std::pow(std::sin(t), D - 2);
            },
            0.0, pi, 600);
        CHECK(I == doctest::Approx(1.0).epsilon(1e-8));
      }
      // orthogonality: Jacobi order is shared across n_polar at fixed channel
      auto s0 = effective_l(q, D, 1.5, beta);
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; b < a; ++b) {
          double I = quad::integrate(
              [&](double t) {
                return polar_wave(a, s0, D, t) * polar_wave(b, s0, D, t) *
                       std::pow(std::sin(t), D - 2);
              },
              0.0, pi, 600);
          CHECK(std::abs(I) < 1e-8);
        }
    }
}

TEST_CASE("polar wave reproduces associated Legendre at D = 3, beta = 0") {
  // m = 0: normalized P_l(cos) -> H_n with channel m = 0, l = n_polar
  // n_polar = 1, m = 0: sqrt(3/2) cos(theta)
  auto s = effective_l(qn3(1, 0), 3, 1.0, 0.0);
  for (double t : {0.4, 1.1, 2.2}) {
    CHECK(std::abs(polar_wave(1, s, 3, t)) ==
          doctest::Approx(std::sqrt(1.5) * std::abs(std::cos(t))).epsilon(1e-9));
  }
  // n_polar = 0, m = 1: normalized sin(theta), i.e. sqrt(3/4) sin
  auto s1 = effective_l(qn3(0, 1), 3, 1.0, 0.0);
  for (double t : {0.4, 1.1, 2.2})
    CHECK(std::abs(polar_wave(0, s1, 3, t)) ==
          doctest::Approx(std::sqrt(0.75) * std::sin(t)).epsilon(1e-9));
  // s-wave is constant
  auto s2 = effective_l(qn3(0, 0), 3, 1.0, 0.0);
  CHECK(polar_wave(0, s2, 3, 0.3) == doctest::Approx(polar_wave(0, s2, 3, 2.0)).epsilon(1e-12));
}
