// Compares the OpenMP grid kernels against the serial reference: residual
// scan over the energy window and the oracle verification batch.

#include <chrono>
#include <cstdio>
#include <vector>

#include "kgring/model.hpp"
#include "kgring/oracle.hpp"
#include "kgring/parallel.hpp"
#include "kgring/radial.hpp"

using namespace kgring;
using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main() {
  ModelParams p{1.0, 1.0, 1.0, 0.5, 3};
  QuantumNumbers qn;
  qn.m = 1;
  qn.n_polar = 1;

  // kernel 1: residual scan
  const int N = 200000;
  const double lo = -p.mu + 1e-6, hi = p.mu + 6.0 * p.a0;
  std::vector<double> serial(N), parallel(N);
  for (int pass = 0; pass < 2; ++pass) {
    bool par = (pass == 1);
    auto& dst = par ? parallel : serial;
    auto t0 = Clock::now();
    parallel_for_index(
        static_cast<std::size_t>(N),
        [&](std::size_t i) {
          double E = lo + (hi - lo) * static_cast<double>(i) / (N - 1);
          try {
            dst[i] = radial::energy_residual(p, qn, E);
          } catch (const std::domain_error&) {
            dst[i] = 0.0;
          }
        },
        par);
    std::printf("residual-scan %-8s N=%d  %.3f s\n", par ? "openmp" : "serial", N,
                seconds_since(t0));
  }
  bool identical = serial == parallel;
  std::printf("residual-scan outputs bit-identical: %s\n", identical ? "yes" : "NO");

  // kernel 2: shooting batch over trial energies
  auto prob = oracle::RadialProblem::from_params(p, 2.0, oracle::Mode::relativistic);
  const int M = 64;
  std::vector<double> mis_s(M), mis_p(M);
  for (int pass = 0; pass < 2; ++pass) {
    bool par = (pass == 1);
    auto& dst = par ? mis_p : mis_s;
    auto t0 = Clock::now();
    parallel_for_index(
        static_cast<std::size_t>(M),
        [&](std::size_t i) {
          double E = 0.1 + 0.05 * static_cast<double>(i);
          dst[i] = oracle::shoot_radial(prob, E).mismatch;
        },
        par);
    std::printf("shoot-batch   %-8s M=%d    %.3f s\n", par ? "openmp" : "serial", M,
                seconds_since(t0));
  }
  std::printf("shoot-batch outputs bit-identical: %s\n", mis_s == mis_p ? "yes" : "NO");
  return identical && mis_s == mis_p ? 0 : 1;
}
