#include "kgring/nucore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kgring::nu {

void HypergeometricForm::validate() const {
  if (sigma.p2 == 0.0 && sigma.p1 == 0.0 && sigma.p0 == 0.0)
    throw std::invalid_argument("HypergeometricForm: sigma must not vanish identically");
}

double HypergeometricForm::scale() const {
  double s = 1.0;
  for (double c : {sigma.p2, sigma.p1, sigma.p0, sigma_tilde.p2, sigma_tilde.p1,
                   sigma_tilde.p0, tau_tilde.p1, tau_tilde.p0})
    s = std::max(s, std::abs(c));
  return s;
}

std::vector<NUBranch> nu_branches(const HypergeometricForm& f, double tol) {
  f.validate();
  const double scale = f.scale();

  // pi(s) = h(s) +/- sqrt(Q(s;k)), h = (sigma' - tau_tilde)/2
  const Linear h{(2.0 * f.sigma.p2 - f.tau_tilde.p1) / 2.0,
                 (f.sigma.p1 - f.tau_tilde.p0) / 2.0};

  // Q(s;k) = q2 s^2 + q1 s + q0 with q_i = u_i + k v_i
  const double u2 = h.p1 * h.p1 - f.sigma_tilde.p2, v2 = f.sigma.p2;
  const double u1 = 2.0 * h.p1 * h.p0 - f.sigma_tilde.p1, v1 = f.sigma.p1;
  const double u0 = h.p0 * h.p0 - f.sigma_tilde.p0, v0 = f.sigma.p0;

  // zero discriminant of Q in s: quadratic in k
  const double qa = v1 * v1 - 4.0 * v2 * v0;
  const double qb = 2.0 * u1 * v1 - 4.0 * (u2 * v0 + u0 * v2);
  const double qc = u1 * u1 - 4.0 * u2 * u0;

  std::vector<double> kroots;
  const double s2 = scale * scale;
  if (std::abs(qa) > tol * s2) {
    double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0 && disc > -tol * s2 * s2) disc = 0.0;
    if (disc < 0.0) return {};  // no real k: not NU-reducible
    double sq = std::sqrt(disc);
    // numerically stable quadratic roots
    double q = -0.5 * (qb + (qb >= 0.0 ? sq : -sq));
    double k1 = q / qa;
    double k2 = (q != 0.0) ? qc / q : -qb / qa - k1;
    kroots = {k1, k2};
    if (std::abs(k1 - k2) <= tol * std::max(1.0, std::abs(k1))) kroots.pop_back();
  } else if (std::abs(qb) > tol * s2) {
    kroots = {-qc / qb};
  } else {
    return {};
  }
  std::sort(kroots.begin(), kroots.end());

  std::vector<NUBranch> out;
  for (double k : kroots) {
    const double q2 = u2 + k * v2, q1 = u1 + k * v1, q0 = u0 + k * v0;
    Linear L;
    if (q2 > tol * s2) {
      L.p1 = std::sqrt(q2);
      L.p0 = q1 / (2.0 * L.p1);
      if (std::abs(q0 - L.p0 * L.p0) > tol * s2 * std::max(1.0, std::abs(q0)))
        continue;  // residual discriminant too large: reject
    } else if (std::abs(q2) <= tol * s2) {
      if (std::abs(q1) > tol * s2) continue;  // degree-1 Q is never a square
      if (q0 < -tol * s2) continue;
      L.p1 = 0.0;
      L.p0 = std::sqrt(std::max(q0, 0.0));
    } else {
      continue;  // negative leading coefficient: square root not real
    }
    for (double sign : {+1.0, -1.0}) {
      NUBranch b;
      b.k = k;
      b.pi = {h.p1 + sign * L.p1, h.p0 + sign * L.p0};
      b.tau = {f.tau_tilde.p1 + 2.0 * b.pi.p1, f.tau_tilde.p0 + 2.0 * b.pi.p0};
      b.tau_slope = b.tau.p1;
      b.lambda = k + b.pi.p1;
      out.push_back(b);
      if (L.p1 == 0.0 && L.p0 == 0.0) break;  // both signs coincide
    }
  }
  return out;
}

NUBranch nu_select(const std::vector<NUBranch>& branches) {
  if (branches.empty()) throw std::invalid_argument("nu_select: empty branch sequence");
  std::vector<NUBranch> admissible;
  for (const auto& b : branches)
    if (b.tau_slope < 0.0) admissible.push_back(b);
  if (admissible.empty())
    throw std::runtime_error("nu_select: no branch with negative tau slope");
  // most negative pi slope first, then smallest k
  std::sort(admissible.begin(), admissible.end(), [](const NUBranch& a, const NUBranch& b) {
    if (a.pi.p1 != b.pi.p1) return a.pi.p1 < b.pi.p1;
    return a.k < b.k;
  });
  return admissible.front();
}

double nu_lambda_n(const HypergeometricForm& f, const NUBranch& b, int n) {
  if (n < 0) throw std::domain_error("nu_lambda_n: require n >= 0");
  return -n * b.tau_slope - 0.5 * n * (n - 1.0) * (2.0 * f.sigma.p2);
}

}  // namespace kgring::nu
