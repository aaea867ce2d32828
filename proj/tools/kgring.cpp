// kgring: bound-state spectra and eigenfunctions of the D-dimensional
// Klein-Gordon equation with equal scalar/vector ring-shaped pseudoharmonic
// potential, with independent numerical verification.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kgring/angular.hpp"
#include "kgring/model.hpp"
#include "kgring/nucore.hpp"
#include "kgring/oracle.hpp"
#include "kgring/parallel.hpp"
#include "kgring/quadrature.hpp"
#include "kgring/radial.hpp"
#include "kgring/runconfig.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

// exit codes
constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

using namespace kgring;

struct Overrides {
  std::string config_path;
  std::string out_path;
  double tol = -1.0;
  std::string window;
  int grid = -1;
  double perturb = 0.0;  // verify self-test: offset injected into closed-form E
  std::string fixture;   // nu-report built-in fixture
};

void apply_overrides(RunConfig& cfg, const Overrides& ov) {
  std::ostringstream extra;
  if (ov.tol > 0.0) {
    cfg.verify_tol = ov.tol;
    extra << "tol=" << format_double(ov.tol) << "\n";
  }
  if (!ov.window.empty()) {
    auto colon = ov.window.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("--window must be 'lo:hi'");
    cfg.window_lo = std::stod(ov.window.substr(0, colon));
    cfg.window_hi = std::stod(ov.window.substr(colon + 1));
    cfg.window_set = true;
    extra << "window=" << ov.window << "\n";
  }
  if (ov.grid > 1) {
    cfg.grid = ov.grid;
    extra << "grid=" << ov.grid << "\n";
  }
  cfg.source_text += extra.str();
}

QuantumNumbers make_qn(const RunConfig& cfg, int n, int n_polar, int m) {
  QuantumNumbers qn;
  qn.n = n;
  qn.n_polar = n_polar;
  qn.m = m;
  if (!cfg.cascade.empty()) {
    qn.cascade = cfg.cascade;
  } else {
    qn.cascade.assign(std::max(0, cfg.params.dim - 3), std::abs(m));
  }
  return qn;
}

SpectrumRequest make_request(const RunConfig& cfg, const QuantumNumbers& qn) {
  SpectrumRequest req = radial::default_request(cfg.params, qn);
  if (cfg.window_set) {
    req.E_lo = cfg.window_lo;
    req.E_hi = cfg.window_hi;
  }
  req.tolerance = cfg.tol;
  req.grid_points = cfg.grid;
  return req;
}

void emit(const std::string& out_path, const std::string& body) {
  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << body;
}

std::string header(const RunConfig& cfg, const std::string& command) {
  std::ostringstream os;
  os << "# kgring " << kVersion << "\n";
  os << "# command " << command << "\n";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a_hash(cfg.source_text)));
  os << "# config-hash " << buf << "\n";
  return os.str();
}

int cmd_spectrum(const RunConfig& cfg, const Overrides& ov) {
  std::ostringstream os;
  os << header(cfg, "spectrum");
  os << "D,n,n_polar,m,beta,E,l_tilde,m_prime,zeta,residual,status\n";
  bool solver_failed = false;
  for (int n = cfg.n.lo; n <= cfg.n.hi; ++n)
    for (int np = cfg.n_polar.lo; np <= cfg.n_polar.hi; ++np)
      for (int m = cfg.m.lo; m <= cfg.m.hi; ++m) {
        auto qn = make_qn(cfg, n, np, m);
        std::string prefix = std::to_string(cfg.params.dim) + "," + std::to_string(n) + "," +
                             std::to_string(np) + "," + std::to_string(m) + "," +
                             format_double(cfg.params.beta);
        try {
          auto states = radial::solve_energies(make_request(cfg, qn));
          for (const auto& s : states)
            os << prefix << "," << format_double(s.E) << "," << format_double(s.shift.l_tilde)
               << "," << format_double(s.shift.m_prime) << "," << format_double(s.zeta) << ","
               << format_double(s.residual) << ",ok\n";
        } catch (const std::runtime_error&) {
          os << prefix << ",,,,,solver-error\n";
          solver_failed = true;
        }
      }
  emit(ov.out_path, os.str());
  return solver_failed ? kExitSolver : kExitOk;
}

int cmd_verify(const RunConfig& cfg, const Overrides& ov) {
  struct Row {
    std::string prefix;
    std::string status = "ok";
    double E_closed = 0.0, E_oracle = 0.0, gap = 0.0, norm = 0.0;
    int nodes = -1;
    bool node_ok = false, pass = false;
    bool has_values = false;
  };
  struct Case {
    QuantumNumbers qn;
    int n, np, m;
  };
  std::vector<Case> cases;
  for (int n = cfg.n.lo; n <= cfg.n.hi; ++n)
    for (int np = cfg.n_polar.lo; np <= cfg.n_polar.hi; ++np)
      for (int m = cfg.m.lo; m <= cfg.m.hi; ++m)
        cases.push_back({make_qn(cfg, n, np, m), n, np, m});

  std::vector<std::vector<Row>> results(cases.size());
  bool solver_failed = false;
  // independent levels: data-parallel across the verification grid
  parallel_for_index(cases.size(), [&](std::size_t ci) {
    const auto& c = cases[ci];
    std::string prefix = std::to_string(cfg.params.dim) + "," + std::to_string(c.n) + "," +
                         std::to_string(c.np) + "," + std::to_string(c.m);
    try {
      auto req = make_request(cfg, c.qn);
      auto states = radial::solve_energies(req);
      if (states.empty()) {
        Row r;
        r.prefix = prefix;
        r.status = "no-root";
        results[ci].push_back(r);
        return;
      }
      for (const auto& s : states) {
        Row r;
        r.prefix = prefix;
        r.has_values = true;
        r.E_closed = s.E + ov.perturb;
        auto prob = oracle::RadialProblem::from_params(cfg.params, s.shift.l_tilde,
                                                       oracle::Mode::relativistic);
        r.E_oracle = oracle::solve_radial_numeric(prob, c.n, req.E_lo, req.E_hi);
        r.gap = std::abs(r.E_closed - r.E_oracle) / std::max(1.0, std::abs(r.E_oracle));
        r.nodes = oracle::shoot_radial(prob, r.E_closed).nodes;
        r.node_ok = (r.nodes == c.n);
        radial::RadialWavefunction R(s, cfg.params.dim, c.n);
        r.norm = quad::integrate(
            [&](double rr) {
              double f = R(rr);
              return f * f * std::pow(rr, cfg.params.dim - 1);
            },
            1e-12, std::sqrt(130.0 / s.alpha), 800);
        r.pass = (r.gap <= cfg.verify_tol) && r.node_ok && std::abs(r.norm - 1.0) <= 1e-6;
        if (!r.pass) r.status = "gap-exceeded";
        results[ci].push_back(r);
      }
    } catch (const std::domain_error&) {
      Row r;
      r.prefix = prefix;
      r.status = "no-real-channel";
      results[ci].push_back(r);
    } catch (const std::runtime_error&) {
      Row r;
      r.prefix = prefix;
      r.status = "solver-error";
      results[ci].push_back(r);
    }
  });

  std::ostringstream os;
  os << header(cfg, "verify");
  os << "D,n,n_polar,m,E_closed,E_oracle,rel_gap,nodes,node_ok,norm,status\n";
  bool all_pass = true;
  for (const auto& rows : results)
    for (const auto& r : rows) {
      if (r.has_values) {
        os << r.prefix << "," << format_double(r.E_closed) << "," << format_double(r.E_oracle)
           << "," << format_double(r.gap) << "," << r.nodes << "," << (r.node_ok ? 1 : 0) << ","
           << format_double(r.norm) << "," << r.status << "\n";
        if (!r.pass) all_pass = false;
      } else {
        os << r.prefix << ",,,,,,," << r.status << "\n";
        if (r.status == "solver-error") solver_failed = true;
        if (r.status == "no-root") all_pass = false;
      }
    }
  emit(ov.out_path, os.str());
  if (solver_failed) return kExitSolver;
  return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_wavefunction(const RunConfig& cfg, const Overrides& ov) {
  auto qn = make_qn(cfg, cfg.n.lo, cfg.n_polar.lo, cfg.m.lo);
  auto states = radial::solve_energies(make_request(cfg, qn));
  if (states.empty()) {
    std::cerr << "wavefunction: no admissible level in window\n";
    return kExitSolver;
  }
  const auto& s = states.front();
  radial::RadialWavefunction R(s, cfg.params.dim, qn.n);
  double r_hi = (cfg.r_max > 0.0) ? cfg.r_max : std::sqrt(60.0 / s.alpha);

  std::ostringstream os;
  os << header(cfg, "wavefunction");
  os << "kind,x,value\n";
  for (int i = 1; i <= cfg.r_samples; ++i) {
    double r = r_hi * i / cfg.r_samples;
    os << "R," << format_double(r) << "," << format_double(R(r)) << "\n";
  }
  const double pi = std::acos(-1.0);
  for (int i = 1; i < cfg.theta_samples - 1; ++i) {
    double t = pi * i / (cfg.theta_samples - 1);
    os << "H," << format_double(t) << ","
       << format_double(angular::polar_wave(qn.n_polar, s.shift, cfg.params.dim, t)) << "\n";
  }
  double norm = quad::integrate(
      [&](double rr) {
        double f = R(rr);
        return f * f * std::pow(rr, cfg.params.dim - 1);
      },
      1e-12, std::sqrt(130.0 / s.alpha), 800);
  os << "norm_R,," << format_double(norm) << "\n";
  double hnorm = quad::integrate(
      [&](double t) {
        double f = angular::polar_wave(qn.n_polar, s.shift, cfg.params.dim, t);
        return f * f * std::pow(std::sin(t), cfg.params.dim - 2);
      },
      0.0, pi, 600);
  os << "norm_H,," << format_double(hnorm) << "\n";
  emit(ov.out_path, os.str());
  return kExitOk;
}

nu::HypergeometricForm fixture_form(const std::string& name) {
  // concrete instantiations of the three reference reductions
  if (name == "angular") {
    // j = 2, Lambda_j = 6, Lambda_{j-1} = 2
    return {{-1.0, 0.0, 1.0}, {-6.0, 0.0, 6.0 - 2.0}, {-2.0, 0.0}};
  }
  if (name == "polar") {
    // D = 5, l~_{D-2} = 1, beta alpha2^2 = 3, n_polar = 1, nu' on the
    // quantization shell
    double Lp = 1.0 * (1.0 + 5.0 - 3.0) + 3.0;
    double lamtilde = std::sqrt((1.0 + 1.0) * (1.0 + 1.0) + 3.0);
    double nup = 2.0 * (1.0 + lamtilde) + Lp + lamtilde - 1.0;
    return {{-1.0, 0.0, 1.0}, {-nup, 0.0, nup - Lp}, {-4.0, 0.0}};
  }
  if (name == "radial") {
    // mu = 1, a0 = 1, r0 = 1, D = 3, l~ = 0, trial E = 1
    double a2 = 2.0, a1 = 0.0, A = 1.0, B = 1.0, C = -2.0, M = 3.0;
    double eps2 = a2 * (a1 + C);
    double gamma2 = 0.25 * ((M - 1.0) * (M - 3.0) + 4.0 * B * a2);
    double alpha2 = A * a2;
    return {{0.0, 2.0, 0.0}, {-alpha2, -eps2, -gamma2}, {0.0, 1.0}};
  }
  throw std::invalid_argument("unknown fixture '" + name + "' (angular|polar|radial)");
}

int cmd_nu_report(const RunConfig& cfg, const Overrides& ov, bool have_config) {
  nu::HypergeometricForm form;
  if (!ov.fixture.empty())
    form = fixture_form(ov.fixture);
  else if (have_config && cfg.form)
    form = *cfg.form;
  else
    throw std::invalid_argument("nu-report: need --fixture or sigma/sigma_tilde/tau_tilde keys");

  auto branches = nu::nu_branches(form);
  std::ostringstream os;
  os << header(cfg, "nu-report");
  os << "k,pi_slope,pi_const,tau_slope,tau_const,lambda,selected\n";
  if (branches.empty()) {
    emit(ov.out_path, os.str());
    std::cerr << "nu-report: no real k (form is not NU-reducible)\n";
    return kExitVerifyFail;
  }
  nu::NUBranch sel;
  bool have_sel = true;
  try {
    sel = nu::nu_select(branches);
  } catch (const std::runtime_error&) {
    have_sel = false;
  }
  for (const auto& b : branches) {
    bool is_sel = have_sel && b.k == sel.k && b.pi.p1 == sel.pi.p1 && b.pi.p0 == sel.pi.p0;
    os << format_double(b.k) << "," << format_double(b.pi.p1) << "," << format_double(b.pi.p0)
       << "," << format_double(b.tau.p1) << "," << format_double(b.tau.p0) << ","
       << format_double(b.lambda) << "," << (is_sel ? 1 : 0) << "\n";
  }
  emit(ov.out_path, os.str());
  return kExitOk;
}

int cmd_limits(const RunConfig& cfg, const Overrides& ov) {
  // n ranges over cfg.n, the orbital channel l over cfg.m
  std::ostringstream os;
  os << header(cfg, "limits");
  os << "kind,n,l,value\n";
  const auto& p = cfg.params;
  for (int n = cfg.n.lo; n <= cfg.n.hi; ++n)
    for (int l = cfg.m.lo; l <= cfg.m.hi; ++l) {
      if (l < 0) continue;
      auto roots = radial::ho_energy_relativistic(n, l, p.dim, cfg.k_osc, p.mu);
      for (std::size_t i = 0; i < roots.size(); ++i)
        os << "ho_relativistic_root" << i << "," << n << "," << l << ","
           << format_double(roots[i]) << "\n";
      os << "nr_oscillator," << n << "," << l << ","
         << format_double(radial::nr_oscillator(n, l, p.dim, cfg.k_osc, p.mu)) << "\n";
      os << "nr_pseudoharmonic," << n << "," << l << ","
         << format_double(radial::nr_pseudoharmonic(p, n, l)) << "\n";
      os << "nr_mapped," << n << "," << l << ","
         << format_double(radial::nr_mapped_energy(p, n, l, p.dim)) << "\n";
      if (p.beta > 0.0) {
        try {
          os << "nr_ring," << n << "," << l << ","
             << format_double(radial::nr_ring(p, n, l, cfg.m.lo)) << "\n";
        } catch (const std::domain_error&) {
          os << "nr_ring," << n << "," << l << ",nan\n";
        }
      }
    }
  emit(ov.out_path, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Klein-Gordon ring-shaped pseudoharmonic spectrum tool"};
  app.require_subcommand(1);

  Overrides ov;
  std::string command;
  for (const char* name : {"spectrum", "wavefunction", "verify", "nu-report", "limits"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", ov.config_path, "run configuration file (key = value)");
    sub->add_option("--out", ov.out_path, "output CSV path (default stdout)");
    sub->add_option("--tol", ov.tol, "verification tolerance override");
    sub->add_option("--window", ov.window, "energy search window lo:hi");
    sub->add_option("--grid", ov.grid, "scan grid points override");
    if (std::string(name) == "verify")
      sub->add_option("--perturb", ov.perturb, "inject offset into closed-form E (self-test)");
    if (std::string(name) == "nu-report")
      sub->add_option("--fixture", ov.fixture, "built-in fixture: angular|polar|radial");
    sub->callback([&command, name]() { command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitConfig : kExitOk;
  }

  RunConfig cfg;
  bool have_config = !ov.config_path.empty();
  try {
    if (have_config) cfg = load_config(ov.config_path);
    else if (command != "nu-report")
      throw std::invalid_argument("--config is required");
    apply_overrides(cfg, ov);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (command == "spectrum") return cmd_spectrum(cfg, ov);
    if (command == "verify") return cmd_verify(cfg, ov);
    if (command == "wavefunction") return cmd_wavefunction(cfg, ov);
    if (command == "nu-report") return cmd_nu_report(cfg, ov, have_config);
    if (command == "limits") return cmd_limits(cfg, ov);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitConfig;
}
