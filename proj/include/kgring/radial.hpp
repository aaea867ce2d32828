#ifndef KGRING_RADIAL_HPP
#define KGRING_RADIAL_HPP

#include <vector>

#include "kgring/angular.hpp"
#include "kgring/model.hpp"

namespace kgring {

// A solved Klein-Gordon level with everything derived from it.
struct EnergyState {
  double E = 0.0;       // relativistic energy
  AngularShift shift;   // angular quantities at this E
  double M = 0.0;       // D + 2 l~
  double zeta = 0.0;    // sqrt((D+2l~-2)^2 + 4 a0 r0^2 (mu+E))
  double Lambda = 0.0;  // (zeta - 1)/2
  double alpha = 0.0;   // sqrt(a0 (mu+E)) / r0
  double gamma_sq = 0.0;
  double eps_sq = 0.0;
  double residual = 0.0;
};

struct SpectrumRequest {
  ModelParams params;
  QuantumNumbers qn;
  double E_lo;
  double E_hi;
  double tolerance = 1e-12;
  int grid_points = 2000;
  int max_roots = 16;
  bool parallel_scan = true;  // false selects the serial reference scan

  void validate() const;
};

namespace radial {

// Default search window: lower edge -mu + 1e-6; the upper edge starts at
// mu + 6 a0 and is widened until the residual is positive there, so the
// requested level is always inside.
SpectrumRequest default_request(const ModelParams& p, const QuantumNumbers& qn);

// LHS - RHS of the transcendental quantization relation, with the effective
// angular momentum recomputed self-consistently at this trial energy.
// Throws std::domain_error where no real angular channel exists.
double energy_residual(const ModelParams& p, const QuantumNumbers& qn, double E);

// All admissible roots in the window, sorted by E. Spurious sign changes
// with mu - E - 2 a0 >= 0 are discarded (the LHS is strictly negative).
std::vector<EnergyState> solve_energies(const SpectrumRequest& req);

// Populates the derived fields of a state at a given energy.
EnergyState make_state(const ModelParams& p, const QuantumNumbers& qn, double E);

// Radial wavefunction of an accepted state, unit-normalized under r^{D-1} dr
// by quadrature. The printed closed-form constant is kept for comparison.
class RadialWavefunction {
 public:
  RadialWavefunction(const EnergyState& state, int D, int n);
  double operator()(double r) const;
  double norm_constant() const { return norm_; }
  double printed_constant() const;

 private:
  double unnorm(double r) const;
  EnergyState state_;
  int D_;
  int n_;
  double norm_;
};

// Real roots E of (mu+E)(mu-E)^2 = (k^2/2)(4n+2l+D)^2 with mu+E > 0, sorted.
std::vector<double> ho_energy_relativistic(int n, int l, int D, double k, double mu);

// Closed-form nonrelativistic limits.
double nr_oscillator(int n, int l, int D, double k, double mu);
double nr_pseudoharmonic(const ModelParams& p, int n, int l);                 // beta = 0, 3D
double nr_ring(const ModelParams& p, int n, int n_tilde, int m);              // beta != 0, 3D
// The solver's quantization relation under the nonrelativistic mapping
// alpha1^2 -> -E_NR, alpha2^2 -> 2 mu (arbitrary D, beta = 0 channel l).
double nr_mapped_energy(const ModelParams& p, int n, int l, int D);

}  // namespace radial
}  // namespace kgring

#endif
