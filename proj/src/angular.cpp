#include "kgring/angular.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "kgring/quadrature.hpp"
#include "kgring/specfun.hpp"

namespace kgring {

void QuantumNumbers::validate(int D) const {
  if (D < 3) throw std::invalid_argument("QuantumNumbers: require D >= 3");
  if (n < 0 || n_polar < 0) throw std::invalid_argument("QuantumNumbers: negative index");
  if (static_cast<int>(cascade.size()) != D - 3)
    throw std::invalid_argument("QuantumNumbers: cascade must have D-3 entries");
  int prev = std::abs(m);  // l~_1 = |m|
  for (int l : cascade) {
    if (l < prev)
      throw std::invalid_argument("QuantumNumbers: cascade must be nondecreasing from |m|");
    prev = l;
  }
}

int QuantumNumbers::top_l(int D) const {
  if (D == 3) return std::abs(m);
  return cascade.back();
}

namespace angular {

std::complex<double> azimuthal_wave(int m, double phi) {
  const double pi = std::acos(-1.0);
  return std::polar(1.0 / std::sqrt(2.0 * pi), m * phi);
}

double m_prime(int l_sub, int D, double alpha2_sq, double beta) {
  if (l_sub < 0 || D < 3) throw std::domain_error("m_prime: bad l_sub or D");
  if (!(alpha2_sq > 0.0) || beta < 0.0)
    throw std::domain_error("m_prime: require alpha2_sq > 0 and beta >= 0");
  double base = l_sub + 0.5 * (D - 3);
  return std::sqrt(base * base + alpha2_sq * beta);
}

AngularShift effective_l(const QuantumNumbers& qn, int D, double alpha2_sq, double beta) {
  qn.validate(D);
  const double mp = m_prime(qn.top_l(D), D, alpha2_sq, beta);
  AngularShift s;
  s.m_prime = mp;
  s.l_prime = qn.n_polar + mp;
  if (beta == 0.0) {
    s.l_tilde = qn.n_polar + qn.top_l(D);  // exact integer reduction
  } else {
    double rad = (qn.n_polar + mp + 0.5) * (qn.n_polar + mp + 0.5) - alpha2_sq * beta;
    if (rad < 0.0)
      throw std::domain_error("effective_l: no real channel (beta too large at this energy)");
    s.l_tilde = -0.5 * (D - 2) + std::sqrt(rad);
  }
  s.lambda_l = s.l_tilde * (s.l_tilde + D - 2);
  return s;
}

namespace {

double cascade_unnorm(int j, int n_j, int l_prev, double theta) {
  double lam = l_prev + 0.5 * (j - 2);
  return std::pow(std::sin(theta), l_prev) *
         specfun::jacobi(n_j, lam, lam, std::cos(theta));
}

double polar_unnorm(int n_polar, double mp, int D, double theta) {
  double expo = mp - 0.5 * (D - 3);
  return std::pow(std::sin(theta), expo) *
         specfun::jacobi(n_polar, mp, mp, std::cos(theta));
}

}  // namespace

double cascade_norm_quadrature(int j, int n_j, int l_prev) {
  if (j < 2) throw std::out_of_range("cascade: require j in [2, D-2]");
  if (n_j < 0 || l_prev < 0) throw std::domain_error("cascade: negative index");
  const double pi = std::acos(-1.0);
  double I = quad::integrate(
      [&](double t) {
        double f = cascade_unnorm(j, n_j, l_prev, t);
        return f * f * std::pow(std::sin(t), j - 1);
      },
      0.0, pi, 400);
  return 1.0 / std::sqrt(I);
}

double cascade_norm_printed(int j, int n_j, int l_prev) {
  using specfun::ln_gamma;
  double garg = n_j + 2.0 * l_prev + j - 2;
  if (garg <= 0.0) return std::numeric_limits<double>::quiet_NaN();  // Gamma pole
  double num = (2.0 * n_j + 2.0 * l_prev + j - 1) * std::tgamma(n_j + 1.0);
  double den = 2.0 * std::exp(ln_gamma(garg));
  return std::sqrt(num / den);
}

double cascade_wave(int j, int n_j, int l_prev, double theta) {
  return cascade_norm_quadrature(j, n_j, l_prev) * cascade_unnorm(j, n_j, l_prev, theta);
}

double polar_norm_quadrature(int n_polar, const AngularShift& shift, int D) {
  const double pi = std::acos(-1.0);
  double I = quad::integrate(
      [&](double t) {
        double f = polar_unnorm(n_polar, shift.m_prime, D, t);
        return f * f * std::pow(std::sin(t), D - 2);
      },
      0.0, pi, 400);
  return 1.0 / std::sqrt(I);
}

double polar_norm_printed(int n_polar, const AngularShift& shift) {
  using specfun::ln_gamma;
  double garg = n_polar + 2.0 * shift.m_prime;
  if (garg <= 0.0) return std::numeric_limits<double>::quiet_NaN();  // Gamma pole
  double num = (2.0 * n_polar + 2.0 * shift.m_prime + 1.0) * std::tgamma(n_polar + 1.0);
  double den = 2.0 * std::exp(ln_gamma(garg));
  return std::sqrt(num / den);
}

double polar_wave(int n_polar, const AngularShift& shift, int D, double theta) {
  if (n_polar < 0) throw std::domain_error("polar_wave: require n_polar >= 0");
  return polar_norm_quadrature(n_polar, shift, D) *
         polar_unnorm(n_polar, shift.m_prime, D, theta);
}

}  // namespace angular
}  // namespace kgring
