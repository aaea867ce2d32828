#ifndef KGRING_NUCORE_HPP
#define KGRING_NUCORE_HPP

#include <array>
#include <vector>

namespace kgring::nu {

// Linear polynomial p1*s + p0.
struct Linear {
  double p1 = 0.0;
  double p0 = 0.0;
  double operator()(double s) const { return p1 * s + p0; }
};

// Quadratic polynomial p2*s^2 + p1*s + p0.
struct Quadratic {
  double p2 = 0.0;
  double p1 = 0.0;
  double p0 = 0.0;
  double operator()(double s) const { return (p2 * s + p1) * s + p0; }
};

// Polynomial data of the hypergeometric-type equation
//   y'' + (tau_tilde/sigma) y' + (sigma_tilde/sigma^2) y = 0.
struct HypergeometricForm {
  Quadratic sigma;
  Quadratic sigma_tilde;
  Linear tau_tilde;

  void validate() const;
  double scale() const;  // magnitude of the coefficient set, for tolerances
};

// One reduction branch: a k root with one sign choice of the square root.
struct NUBranch {
  double k = 0.0;
  Linear pi;
  Linear tau;        // tau_tilde + 2 pi
  double tau_slope = 0.0;
  double lambda = 0.0;  // k + pi'
};

// Enumerates up to four branches: the zero-discriminant condition is a
// quadratic in k; each real k yields both signs of the perfect-square root.
// Empty result means the form is not NU-reducible with real parameters.
std::vector<NUBranch> nu_branches(const HypergeometricForm& f, double tol = 1e-10);

// Physical branch: negative tau slope; among several, smallest pi slope,
// then smallest k (reproduces the expected choice on all reference fixtures).
NUBranch nu_select(const std::vector<NUBranch>& branches);

// lambda_n = -n tau' - n(n-1)/2 sigma''
double nu_lambda_n(const HypergeometricForm& f, const NUBranch& b, int n);

}  // namespace kgring::nu

#endif
