#include "kgring/radial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "kgring/parallel.hpp"
#include "kgring/quadrature.hpp"
#include "kgring/specfun.hpp"

namespace kgring {

void SpectrumRequest::validate() const {
  params.validate();
  qn.validate(params.dim);
  if (!(E_lo > -params.mu)) throw std::invalid_argument("SpectrumRequest: E_lo must exceed -mu");
  if (!(E_lo < E_hi)) throw std::invalid_argument("SpectrumRequest: empty window");
  if (!(tolerance > 0.0)) throw std::invalid_argument("SpectrumRequest: tolerance must be positive");
  if (grid_points < 2) throw std::invalid_argument("SpectrumRequest: need at least 2 grid points");
}

namespace radial {

SpectrumRequest default_request(const ModelParams& p, const QuantumNumbers& qn) {
  SpectrumRequest req;
  req.params = p;
  req.qn = qn;
  req.E_lo = -p.mu + 1e-6;
  // the residual grows without bound at large E; expand the window until it
  // has turned positive so the highest requested level is always bracketed
  double hi = p.mu + 6.0 * p.a0;
  for (int i = 0; i < 60 && energy_residual(p, qn, hi) < 0.0; ++i) hi *= 1.5;
  req.E_hi = hi;
  return req;
}

double energy_residual(const ModelParams& p, const QuantumNumbers& qn, double E) {
  if (!(E > -p.mu)) throw std::domain_error("energy_residual: require E > -mu");
  const auto ec = energy_couplings(p, E);
  const auto shift = angular::effective_l(qn, p.dim, ec.alpha2_sq, p.beta);
  const double lt = shift.l_tilde;
  const double base = p.dim + 2.0 * lt - 2.0;
  const double lhs = -std::sqrt(p.a0) *
                     (4.0 * qn.n + 2.0 +
                      std::sqrt(base * base + 4.0 * p.a0 * p.r0 * p.r0 * ec.alpha2_sq));
  const double rhs = p.r0 * std::sqrt(ec.alpha2_sq) * (p.mu - E - 2.0 * p.a0);
  return lhs - rhs;
}

EnergyState make_state(const ModelParams& p, const QuantumNumbers& qn, double E) {
  const auto ec = energy_couplings(p, E);
  const auto dc = derive_couplings(p);
  EnergyState s;
  s.E = E;
  s.shift = angular::effective_l(qn, p.dim, ec.alpha2_sq, p.beta);
  s.M = p.dim + 2.0 * s.shift.l_tilde;
  s.zeta = std::sqrt((s.M - 2.0) * (s.M - 2.0) + 4.0 * p.a0 * p.r0 * p.r0 * ec.alpha2_sq);
  s.Lambda = 0.5 * (s.zeta - 1.0);
  s.alpha = std::sqrt(p.a0 * ec.alpha2_sq) / p.r0;
  s.eps_sq = ec.alpha2_sq * (ec.alpha1_sq + dc.C);
  s.gamma_sq = 0.25 * ((s.M - 1.0) * (s.M - 3.0) + 4.0 * dc.B * ec.alpha2_sq);
  s.residual = energy_residual(p, qn, E);
  return s;
}

std::vector<EnergyState> solve_energies(const SpectrumRequest& req) {
  req.validate();
  const ModelParams& p = req.params;
  const int N = req.grid_points;
  const double h = (req.E_hi - req.E_lo) / (N - 1);

  std::vector<double> vals(N);
  std::vector<char> ok(N, 0);
  parallel_for_index(
      static_cast<std::size_t>(N),
      [&](std::size_t i) {
        double E = req.E_lo + h * static_cast<double>(i);
        try {
          vals[i] = energy_residual(p, req.qn, E);
          ok[i] = 1;
        } catch (const std::domain_error&) {
          ok[i] = 0;
        }
      },
      req.parallel_scan);

  auto residual_at = [&](double E) { return energy_residual(p, req.qn, E); };

  std::vector<EnergyState> out;
  for (int i = 0; i + 1 < N; ++i) {
    if (!ok[i] || !ok[i + 1]) continue;
    double fa = vals[i], fb = vals[i + 1];
    double a = req.E_lo + h * i, b = a + h;
    if (fa == 0.0) {  // exact grid hit
      if (a > p.mu - 2.0 * p.a0) out.push_back(make_state(p, req.qn, a));
      continue;
    }
    if (!(fa * fb < 0.0)) continue;
    double fmid = 0.0, mid = 0.5 * (a + b);
    for (int it = 0; it < 200; ++it) {
      mid = 0.5 * (a + b);
      fmid = residual_at(mid);
      if (fmid == 0.0 || (b - a) < 1e-16 * std::max(1.0, std::abs(mid))) break;
      if ((fa < 0.0) == (fmid < 0.0)) {
        a = mid;
        fa = fmid;
      } else {
        b = mid;
      }
    }
    if (std::abs(fmid) > std::max(req.tolerance, 1e-9)) {
      std::ostringstream msg;
      msg << "solve_energies: bisection stalled at E = " << mid << ", residual = " << fmid;
      throw std::runtime_error(msg.str());
    }
    // admissibility: the LHS is strictly negative, so mu - E - 2 a0 < 0
    if (!(mid > p.mu - 2.0 * p.a0)) continue;
    out.push_back(make_state(p, req.qn, mid));
    if (static_cast<int>(out.size()) >= req.max_roots) break;
  }
  std::sort(out.begin(), out.end(),
            [](const EnergyState& x, const EnergyState& y) { return x.E < y.E; });
  return out;
}

RadialWavefunction::RadialWavefunction(const EnergyState& state, int D, int n)
    : state_(state), D_(D), n_(n), norm_(1.0) {
  if (n < 0) throw std::domain_error("RadialWavefunction: require n >= 0");
  // integrand decays like exp(-alpha r^2); truncate where it is ~1e-52
  double r_max = std::sqrt(120.0 / state_.alpha);
  double I = quad::integrate(
      [&](double r) {
        double f = unnorm(r);
        return f * f * std::pow(r, D_ - 1);
      },
      0.0, r_max, 600);
  norm_ = 1.0 / std::sqrt(I);
}

double RadialWavefunction::unnorm(double r) const {
  double s = state_.alpha * r * r;
  return std::pow(r, state_.Lambda + 1.0 - 0.5 * (D_ - 1)) * std::exp(-0.5 * s) *
         specfun::laguerre(n_, state_.Lambda + 0.5, s);
}

double RadialWavefunction::operator()(double r) const {
  if (!(r > 0.0)) throw std::domain_error("RadialWavefunction: require r > 0");
  return norm_ * unnorm(r);
}

double RadialWavefunction::printed_constant() const {
  using specfun::ln_gamma;
  double lg = ln_gamma(state_.Lambda + n_ + 1.5);
  return std::sqrt(2.0 * std::pow(state_.alpha, state_.Lambda + 1.5) *
                   std::tgamma(n_ + 1.0) / std::exp(lg));
}

namespace {

// real roots of x^3 + a x^2 + b x + c
std::vector<double> cubic_roots(double a, double b, double c) {
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double disc = q * q / 4.0 + p * p * p / 27.0;
  std::vector<double> roots;
  if (disc > 0.0) {
    double sq = std::sqrt(disc);
    double u = std::cbrt(-q / 2.0 + sq), v = std::cbrt(-q / 2.0 - sq);
    roots.push_back(u + v - a / 3.0);
  } else {
    double rho = std::sqrt(-p * p * p / 27.0);
    double theta = std::acos(std::clamp(-q / (2.0 * rho), -1.0, 1.0));
    double mag = 2.0 * std::sqrt(-p / 3.0);
    for (int k = 0; k < 3; ++k)
      roots.push_back(mag * std::cos((theta + 2.0 * std::acos(-1.0) * k) / 3.0) - a / 3.0);
  }
  return roots;
}

}  // namespace

std::vector<double> ho_energy_relativistic(int n, int l, int D, double k, double mu) {
  if (!(k > 0.0)) throw std::domain_error("ho_energy_relativistic: require k > 0");
  if (n < 0 || l < 0 || D < 1) throw std::domain_error("ho_energy_relativistic: bad indices");
  const double c = 0.5 * k * k * std::pow(4.0 * n + 2.0 * l + D, 2);
  // (mu+E)(mu-E)^2 = c  <=>  E^3 - mu E^2 - mu^2 E + mu^3 - c = 0
  auto roots = cubic_roots(-mu, -mu * mu, mu * mu * mu - c);
  std::vector<double> out;
  for (double E : roots) {
    // Newton polish on f(E) = (mu+E)(mu-E)^2 - c
    for (int it = 0; it < 60; ++it) {
      double f = (mu + E) * (mu - E) * (mu - E) - c;
      double df = (mu - E) * (mu - E) - 2.0 * (mu + E) * (mu - E);
      if (df == 0.0) break;
      double step = f / df;
      E -= step;
      if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(E))) break;
    }
    if (mu + E > 0.0) out.push_back(E);
  }
  std::sort(out.begin(), out.end());
  // drop duplicates from polishing distinct cubic roots into the same value
  out.erase(std::unique(out.begin(), out.end(),
                        [](double x, double y) { return std::abs(x - y) < 1e-12; }),
            out.end());
  return out;
}

double nr_oscillator(int n, int l, int D, double k, double mu) {
  if (!(k > 0.0) || !(mu > 0.0)) throw std::domain_error("nr_oscillator: require k, mu > 0");
  return k / std::sqrt(mu) * (2.0 * n + l + 0.5 * D);
}

double nr_pseudoharmonic(const ModelParams& p, int n, int l) {
  p.validate();
  double rad = (l + 0.5) * (l + 0.5) + 2.0 * p.mu * p.a0 * p.r0 * p.r0;
  return -2.0 * p.a0 +
         std::sqrt(2.0 * p.a0 / (p.mu * p.r0 * p.r0)) * (2.0 * n + 1.0 + std::sqrt(rad));
}

double nr_ring(const ModelParams& p, int n, int n_tilde, int m) {
  p.validate();
  double inner = n_tilde + std::sqrt(m * m + 2.0 * p.mu * p.beta) + 0.5;
  double rad = inner * inner + 2.0 * p.mu * (p.a0 * p.r0 * p.r0 - p.beta);
  if (rad < 0.0) throw std::domain_error("nr_ring: negative radicand");
  return -2.0 * p.a0 +
         std::sqrt(2.0 * p.a0 / (p.mu * p.r0 * p.r0)) * (2.0 * n + 1.0 + std::sqrt(rad));
}

double nr_mapped_energy(const ModelParams& p, int n, int l, int D) {
  const auto dc = derive_couplings(p);
  const double base = D + 2.0 * l - 2.0;
  const double zeta = std::sqrt(base * base + 8.0 * p.mu * dc.B);
  return dc.C + std::sqrt(dc.A / (2.0 * p.mu)) * (4.0 * n + 2.0 + zeta);
}

}  // namespace radial
}  // namespace kgring
