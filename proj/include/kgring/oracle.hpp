#ifndef KGRING_ORACLE_HPP
#define KGRING_ORACLE_HPP

#include "kgring/model.hpp"

namespace kgring::oracle {

enum class Mode { relativistic, nonrelativistic };

// Reduced radial problem g'' = W(r; E) g with
//   W = (M-1)(M-3)/(4 r^2) + c2 (A r^2 + B/r^2 + C) + c1 c2,
// M = D + 2 l~, where (c1, c2) = (mu - E, mu + E) in relativistic mode and
// (-E, 2 mu) in nonrelativistic mode. The channel l~ is held fixed; the
// self-consistent coupling is exercised by the caller.
struct RadialProblem {
  int D = 3;
  double l_tilde = 0.0;
  double mu = 1.0;
  double A = 0.0, B = 0.0, C = 0.0;
  Mode mode = Mode::relativistic;
  double r_min = 1e-3;
  double r_max = 10.0;
  int n_steps = 4000;

  static RadialProblem from_params(const ModelParams& p, double l_tilde, Mode mode);
  // harmonic oscillator V = (1/2) k^2 r^2, integer channel l
  static RadialProblem oscillator(double k, int l, int D, double mu, Mode mode);

  double W(double r, double E) const;
};

struct ShootResult {
  double mismatch;  // scaled Wronskian defect at the matching radius
  int nodes;        // sign changes of the assembled solution
};

// Outward from r_min with the regular indicial exponent, inward from r_max
// with Gaussian decay; matched near the potential minimum.
ShootResult shoot_radial(const RadialProblem& prob, double E);

// n-th eigenvalue in [E_lo, E_hi] by mismatch bracketing with node-count
// steering, to ~1e-8 absolute. Throws std::runtime_error when not found.
double solve_radial_numeric(const RadialProblem& prob, int n, double E_lo, double E_hi,
                            int scan_points = 400);

// Polar equation on theta in (0, pi):
//   H'' + (D-2) cot(theta) H' + [nu' - (Lam + strength cos^2)/sin^2] H = 0,
// Lam = m_channel (m_channel + D - 3), strength = beta alpha2^2.
struct PolarProblem {
  int D = 3;
  double m_channel = 0.0;
  double strength = 0.0;
  int n_steps = 8000;
};

// Returns l' = -(D-2)/2 + sqrt(((D-2)/2)^2 + nu + strength) for the
// n_polar-th eigenvalue nu, which equals n_polar + m' at D = 3 and
// n_polar + m' - (D-3)/2 in general. Solved by parity shooting on a half
// domain with indicial startup; the result is accepted only if a doubled
// grid agrees within 1e-6. The effective angular momentum follows as
// l~ = -(D-2)/2 + sqrt((l' + (D-2)/2)^2 - strength).
double solve_polar_numeric(const PolarProblem& prob, int n_polar);

}  // namespace kgring::oracle

#endif
