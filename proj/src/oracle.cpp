#include "kgring/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "kgring/parallel.hpp"

namespace kgring::oracle {

namespace {

// One RK4 step of g'' = W(x) g; state y = (g, g').
template <class WFun>
void rk4_step(const WFun& W, double x, double h, double& g, double& gp) {
  auto f = [&](double xx, double gg, double pp, double& dg, double& dp) {
    dg = pp;
    dp = W(xx) * gg;
  };
  double k1g, k1p, k2g, k2p, k3g, k3p, k4g, k4p;
  f(x, g, gp, k1g, k1p);
  f(x + 0.5 * h, g + 0.5 * h * k1g, gp + 0.5 * h * k1p, k2g, k2p);
  f(x + 0.5 * h, g + 0.5 * h * k2g, gp + 0.5 * h * k2p, k3g, k3p);
  f(x + h, g + h * k3g, gp + h * k3p, k4g, k4p);
  g += h / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
  gp += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
}

struct EndState {
  double g, gp;
  int nodes;
};

// Integrates from x0 to x1 (either direction). Steps are log-spaced over an
// initial graded segment near x0 (fractional-power startup), then uniform.
// Renormalizes to avoid overflow; only ratios and node counts survive.
template <class WFun>
EndState integrate(const WFun& W, double x0, double x_graded, double x1, int n_graded,
                   int n_uniform, double g, double gp) {
  int nodes = 0;
  double last_sign = (g > 0.0) ? 1.0 : (g < 0.0 ? -1.0 : 0.0);
  auto advance = [&](double x, double h) {
    rk4_step(W, x, h, g, gp);
    double s = (g > 0.0) ? 1.0 : (g < 0.0 ? -1.0 : 0.0);
    if (s != 0.0 && last_sign != 0.0 && s != last_sign) ++nodes;
    if (s != 0.0) last_sign = s;
    double a = std::max(std::abs(g), std::abs(gp));
    if (a > 1e100) {
      g /= a;
      gp /= a;
    }
  };
  double x = x0;
  if (n_graded > 0 && x_graded != x0) {
    double ratio = std::pow(x_graded / x0, 1.0 / n_graded);  // same sign side
    for (int i = 0; i < n_graded; ++i) {
      double xn = x0 * std::pow(ratio, i + 1);
      advance(x, xn - x);
      x = xn;
    }
    x = x_graded;
  }
  double h = (x1 - x) / n_uniform;
  for (int i = 0; i < n_uniform; ++i) advance(x + i * h, h);
  return {g, gp, nodes};
}

double wronskian_mismatch(const EndState& out, const EndState& in) {
  double w = out.gp * in.g - in.gp * out.g;
  double scale = std::sqrt((out.g * out.g + out.gp * out.gp) *
                           (in.g * in.g + in.gp * in.gp));
  return w / scale;
}

}  // namespace

RadialProblem RadialProblem::from_params(const ModelParams& p, double l_tilde, Mode mode) {
  const auto dc = derive_couplings(p);
  RadialProblem prob;
  prob.D = p.dim;
  prob.l_tilde = l_tilde;
  prob.mu = p.mu;
  prob.A = dc.A;
  prob.B = dc.B;
  prob.C = dc.C;
  prob.mode = mode;
  prob.r_min = 1e-3 * p.r0;
  prob.r_max = 0.0;  // auto
  return prob;
}

RadialProblem RadialProblem::oscillator(double k, int l, int D, double mu, Mode mode) {
  RadialProblem prob;
  prob.D = D;
  prob.l_tilde = l;
  prob.mu = mu;
  prob.A = 0.5 * k * k;
  prob.B = prob.C = 0.0;
  prob.mode = mode;
  prob.r_min = 1e-3;
  prob.r_max = 0.0;
  return prob;
}

double RadialProblem::W(double r, double E) const {
  const double M = D + 2.0 * l_tilde;
  const double c1 = (mode == Mode::relativistic) ? mu - E : -E;
  const double c2 = (mode == Mode::relativistic) ? mu + E : 2.0 * mu;
  return (M - 1.0) * (M - 3.0) / (4.0 * r * r) + c2 * (A * r * r + B / (r * r) + C) + c1 * c2;
}

ShootResult shoot_radial(const RadialProblem& prob, double E) {
  const double M = prob.D + 2.0 * prob.l_tilde;
  const double c1 = (prob.mode == Mode::relativistic) ? prob.mu - E : -E;
  const double c2 = (prob.mode == Mode::relativistic) ? prob.mu + E : 2.0 * prob.mu;
  if (prob.mode == Mode::relativistic && !(c2 > 0.0))
    throw std::domain_error("shoot_radial: require E > -mu");
  if (!(prob.A > 0.0)) throw std::domain_error("shoot_radial: require A > 0");

  // regular indicial exponent at r -> 0: s0 (s0 - 1) = c0
  const double c0 = (M - 1.0) * (M - 3.0) / 4.0 + c2 * prob.B;
  const double s0 = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * c0));

  const double alpha = std::sqrt(prob.A * c2);  // Gaussian decay rate
  const double r_t = std::sqrt((std::abs(c1) + std::abs(prob.C) + 1.0) / prob.A);
  double r_hi = std::max({prob.r_max, 1.5 * r_t, std::sqrt(80.0 / alpha)});

  // match near the minimum of W (the classical region)
  double r_match;
  if (c0 > 0.0)
    r_match = std::clamp(std::pow(c0 / (c2 * prob.A), 0.25), 2.0 * prob.r_min, 0.7 * r_hi);
  else
    r_match = 0.3 * r_hi;

  auto W = [&](double r) { return prob.W(r, E); };

  const int n_graded = prob.n_steps / 4;
  const int n_uniform = prob.n_steps - n_graded;
  EndState out = integrate(W, prob.r_min, 0.2 * r_match, r_match, n_graded, n_uniform,
                           std::pow(prob.r_min, s0), s0 * std::pow(prob.r_min, s0 - 1.0));
  // inward: WKB decay slope at the outer edge
  double gp0 = -std::sqrt(std::max(W(r_hi), 0.0));
  EndState in = integrate(W, r_hi, r_hi, r_match, 0, prob.n_steps, 1.0, gp0);

  return {wronskian_mismatch(out, in), out.nodes + in.nodes};
}

double solve_radial_numeric(const RadialProblem& prob, int n, double E_lo, double E_hi,
                            int scan_points) {
  if (n < 0) throw std::domain_error("solve_radial_numeric: require n >= 0");
  if (!(E_lo < E_hi)) throw std::invalid_argument("solve_radial_numeric: empty window");

  const int N = scan_points;
  std::vector<double> mis(N);
  std::vector<int> nodes(N);
  std::vector<char> ok(N, 0);
  const double h = (E_hi - E_lo) / (N - 1);
  parallel_for_index(static_cast<std::size_t>(N), [&](std::size_t i) {
    double E = E_lo + h * static_cast<double>(i);
    try {
      auto r = shoot_radial(prob, E);
      mis[i] = r.mismatch;
      nodes[i] = r.nodes;
      ok[i] = 1;
    } catch (const std::domain_error&) {
      ok[i] = 0;
    }
  });

  for (int i = 0; i + 1 < N; ++i) {
    if (!ok[i] || !ok[i + 1]) continue;
    if (!(mis[i] * mis[i + 1] < 0.0)) continue;
    if (n < nodes[i] || n > nodes[i + 1]) continue;  // node-count steering
    double a = E_lo + h * i, b = a + h;
    double fa = mis[i];
    double mid = a;
    int mid_nodes = nodes[i];
    for (int it = 0; it < 100; ++it) {
      mid = 0.5 * (a + b);
      auto r = shoot_radial(prob, mid);
      mid_nodes = r.nodes;
      if (r.mismatch == 0.0 || (b - a) < 1e-10 * std::max(1.0, std::abs(mid))) break;
      if ((fa < 0.0) == (r.mismatch < 0.0)) {
        a = mid;
        fa = r.mismatch;
      } else {
        b = mid;
      }
    }
    if (mid_nodes == n || shoot_radial(prob, mid - 2e-9).nodes == n) return mid;
  }
  std::ostringstream msg;
  msg << "solve_radial_numeric: eigenvalue with " << n << " nodes not found in ["
      << E_lo << ", " << E_hi << "]";
  throw std::runtime_error(msg.str());
}

namespace {

double polar_eigen_at_resolution(const PolarProblem& prob, int n_polar, int n_steps) {
  const double pi = std::acos(-1.0);
  const double Lam = prob.m_channel * (prob.m_channel + prob.D - 3.0);
  const double q0 = Lam + prob.strength;
  // indicial exponent at theta -> 0 (and pi, by symmetry)
  const double kappa =
      0.5 * (-(prob.D - 3.0) + std::sqrt((prob.D - 3.0) * (prob.D - 3.0) + 4.0 * q0));
  const double m_eff = kappa + 0.5 * (prob.D - 3.0);  // indicial m'

  // Eigenfunctions are parity eigenstates about pi/2: shoot on (0, pi/2]
  // only, with u'(pi/2) = 0 for even n_polar and u(pi/2) = 0 for odd.
  // The companion variable u = sin^{(D-2)/2}(t) H removes the first
  // derivative: u'' = W(t) u.
  const bool even = (n_polar % 2 == 0);
  const int nodes_half = n_polar / 2;  // strict interior nodes on (0, pi/2)
  auto shoot = [&](double nu) {
    double half = 0.5 * (prob.D - 2.0);
    auto Wt = [&](double t) {
      double ct = std::cos(t), st = std::sin(t);
      return (Lam + prob.strength * ct * ct) / (st * st) - nu +
             half * (half - 1.0) * (ct * ct) / (st * st) - half;
    };
    // u ~ theta^{kappa + (D-2)/2} near theta = 0
    double e0 = kappa + half;
    double t0 = 1e-8;
    int n_graded = n_steps / 4, n_uniform = n_steps - n_graded;
    EndState left = integrate(Wt, t0, 0.05, 0.5 * pi, n_graded, n_uniform,
                              std::pow(t0, e0), e0 * std::pow(t0, e0 - 1.0));
    double scale = std::sqrt(left.g * left.g + left.gp * left.gp);
    return ShootResult{(even ? left.gp : left.g) / scale, left.nodes};
  };

  // the eigenvalues sit near (n + m_eff + 1/2)^2 - strength - c^2; bracket
  // the target with one-level margins and let node counts disambiguate
  const double c = 0.5 * (prob.D - 2.0);
  double lp_lo = m_eff + std::max(0, n_polar - 1) + 0.5;
  double lp_hi = m_eff + n_polar + 2.0;
  double nu_lo = lp_lo * lp_lo - prob.strength - c * c - 0.5;
  double nu_hi = lp_hi * lp_hi - c * c;

  const int N = 240;
  std::vector<double> mis(N);
  std::vector<int> nodes(N);
  const double h = (nu_hi - nu_lo) / (N - 1);
  parallel_for_index(static_cast<std::size_t>(N), [&](std::size_t i) {
    auto r = shoot(nu_lo + h * static_cast<double>(i));
    mis[i] = r.mismatch;
    nodes[i] = r.nodes;
  });

  for (int i = 0; i + 1 < N; ++i) {
    if (!(mis[i] * mis[i + 1] < 0.0)) continue;
    if (nodes_half < nodes[i] || nodes_half > nodes[i + 1]) continue;
    double a = nu_lo + h * i, b = a + h, fa = mis[i];
    double mid = a;
    int mid_nodes = nodes[i];
    for (int it = 0; it < 100; ++it) {
      mid = 0.5 * (a + b);
      auto r = shoot(mid);
      mid_nodes = r.nodes;
      if (r.mismatch == 0.0 || (b - a) < 1e-11 * std::max(1.0, std::abs(mid))) break;
      if ((fa < 0.0) == (r.mismatch < 0.0)) {
        a = mid;
        fa = r.mismatch;
      } else {
        b = mid;
      }
    }
    if (mid_nodes == nodes_half || shoot(mid - 1e-9).nodes == nodes_half) return mid;
  }
  throw std::runtime_error("solve_polar_numeric: eigenvalue not found in scan window");
}

}  // namespace

double solve_polar_numeric(const PolarProblem& prob, int n_polar) {
  if (n_polar < 0) throw std::domain_error("solve_polar_numeric: require n_polar >= 0");
  if (prob.strength < 0.0) throw std::domain_error("solve_polar_numeric: strength >= 0");
  double nu1 = polar_eigen_at_resolution(prob, n_polar, prob.n_steps);
  double nu2 = polar_eigen_at_resolution(prob, n_polar, 2 * prob.n_steps);
  // invert the strength-shifted separation constant nu' = nu + strength;
  // at D = 3 this is exactly n_polar + m'
  auto to_lprime = [&](double nu) {
    double half = 0.5 * (prob.D - 2.0);
    return -half + std::sqrt(half * half + nu + prob.strength);
  };
  double l1 = to_lprime(nu1), l2 = to_lprime(nu2);
  if (std::abs(l1 - l2) > 1e-6)
    throw std::runtime_error("solve_polar_numeric: grid not converged to 1e-6");
  return l2;
}

}  // namespace kgring::oracle
