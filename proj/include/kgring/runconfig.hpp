#ifndef KGRING_RUNCONFIG_HPP
#define KGRING_RUNCONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kgring/model.hpp"
#include "kgring/nucore.hpp"

namespace kgring {

struct IntRange {
  int lo = 0;
  int hi = 0;
};

// Strict key = value run configuration. Unknown keys are rejected.
struct RunConfig {
  ModelParams params{1.0, 1.0, 1.0, 0.0, 3};
  IntRange n{0, 0};
  IntRange n_polar{0, 0};
  IntRange m{0, 0};
  std::vector<int> cascade;  // optional; defaults to all |m|
  double window_lo = 0.0, window_hi = 0.0;
  bool window_set = false;
  double tol = 1e-10;
  double verify_tol = 1e-6;
  int grid = 2000;
  int r_samples = 200;
  int theta_samples = 181;
  double r_max = 0.0;  // 0 = auto
  double k_osc = 1.0;  // oscillator stiffness for the limits job
  std::optional<nu::HypergeometricForm> form;  // user NU polynomial data

  std::string source_text;  // canonical text, for the output hash
};

// Throws std::invalid_argument on malformed or unknown keys.
RunConfig load_config(const std::string& path);

std::uint64_t fnv1a_hash(const std::string& s);

// fixed 17-significant-digit float formatting for byte-identical output
std::string format_double(double v);

}  // namespace kgring

#endif
