#include "kgring/runconfig.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kgring {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

IntRange parse_range(const std::string& v, const std::string& key) {
  IntRange r;
  auto colon = v.find(':');
  try {
    if (colon == std::string::npos) {
      r.lo = r.hi = std::stoi(v);
    } else {
      r.lo = std::stoi(v.substr(0, colon));
      r.hi = std::stoi(v.substr(colon + 1));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad integer range for key '" + key + "': " + v);
  }
  if (r.lo > r.hi) throw std::invalid_argument("config: empty range for key '" + key + "'");
  return r;
}

std::vector<double> parse_doubles(const std::string& v, const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) continue;
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("config: bad number in key '" + key + "': " + tok);
    }
  }
  return out;
}

double parse_double(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return d;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad number for key '" + key + "': " + v);
  }
}

}  // namespace

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  RunConfig cfg;
  nu::Quadratic sigma, sigma_tilde;
  nu::Linear tau_tilde;
  bool has_sigma = false, has_sigma_tilde = false, has_tau_tilde = false;

  std::string line;
  std::ostringstream canonical;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not 'key = value'");
    std::string key = trim(s.substr(0, eq));
    std::string val = trim(s.substr(eq + 1));
    canonical << key << "=" << val << "\n";

    if (key == "mu") cfg.params.mu = parse_double(val, key);
    else if (key == "a0") cfg.params.a0 = parse_double(val, key);
    else if (key == "r0") cfg.params.r0 = parse_double(val, key);
    else if (key == "beta") cfg.params.beta = parse_double(val, key);
    else if (key == "dim") cfg.params.dim = static_cast<int>(parse_double(val, key));
    else if (key == "n") cfg.n = parse_range(val, key);
    else if (key == "n_polar") cfg.n_polar = parse_range(val, key);
    else if (key == "m") cfg.m = parse_range(val, key);
    else if (key == "cascade") {
      for (double d : parse_doubles(val, key)) cfg.cascade.push_back(static_cast<int>(d));
    } else if (key == "window") {
      auto colon = val.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("config: window must be 'lo:hi'");
      cfg.window_lo = parse_double(trim(val.substr(0, colon)), key);
      cfg.window_hi = parse_double(trim(val.substr(colon + 1)), key);
      cfg.window_set = true;
    } else if (key == "tol") cfg.tol = parse_double(val, key);
    else if (key == "verify_tol") cfg.verify_tol = parse_double(val, key);
    else if (key == "grid") cfg.grid = static_cast<int>(parse_double(val, key));
    else if (key == "r_samples") cfg.r_samples = static_cast<int>(parse_double(val, key));
    else if (key == "theta_samples") cfg.theta_samples = static_cast<int>(parse_double(val, key));
    else if (key == "r_max") cfg.r_max = parse_double(val, key);
    else if (key == "k") cfg.k_osc = parse_double(val, key);
    else if (key == "sigma" || key == "sigma_tilde" || key == "tau_tilde") {
      auto c = parse_doubles(val, key);
      if (key == "tau_tilde") {
        if (c.size() != 2) throw std::invalid_argument("config: tau_tilde needs 2 coefficients");
        tau_tilde = {c[0], c[1]};
        has_tau_tilde = true;
      } else {
        if (c.size() != 3) throw std::invalid_argument("config: " + key + " needs 3 coefficients");
        if (key == "sigma") { sigma = {c[0], c[1], c[2]}; has_sigma = true; }
        else { sigma_tilde = {c[0], c[1], c[2]}; has_sigma_tilde = true; }
      }
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  if (has_sigma || has_sigma_tilde || has_tau_tilde) {
    if (!(has_sigma && has_sigma_tilde && has_tau_tilde))
      throw std::invalid_argument("config: sigma, sigma_tilde and tau_tilde must all be given");
    cfg.form = nu::HypergeometricForm{sigma, sigma_tilde, tau_tilde};
  }
  cfg.params.validate();
  if (cfg.n.lo < 0 || cfg.n_polar.lo < 0)
    throw std::invalid_argument("config: quantum-number ranges must be nonnegative");
  if (cfg.tol <= 0.0 || cfg.verify_tol <= 0.0)
    throw std::invalid_argument("config: tolerances must be positive");
  if (cfg.grid < 2) throw std::invalid_argument("config: grid must be >= 2");
  cfg.source_text = canonical.str();
  return cfg;
}

std::uint64_t fnv1a_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace kgring
