#ifndef KGRING_MODEL_HPP
#define KGRING_MODEL_HPP

#include <stdexcept>

namespace kgring {

// Natural units, hbar = c = 1.
struct ModelParams {
  double mu;    // rest mass
  double a0;    // dissociation energy
  double r0;    // equilibrium internuclear distance
  double beta;  // ring-shape strength, >= 0
  int dim;      // spatial dimension D >= 3

  void validate() const;
};

// Couplings of V1(r) = A r^2 + B / r^2 + C.
struct DerivedCouplings {
  double A;  // a0 / r0^2
  double B;  // a0 * r0^2
  double C;  // -2 a0
};

// alpha1^2 = mu - E, alpha2^2 = mu + E.
struct EnergyCouplings {
  double alpha1_sq;
  double alpha2_sq;
};

DerivedCouplings derive_couplings(const ModelParams& p);
EnergyCouplings energy_couplings(const ModelParams& p, double E);

}  // namespace kgring

#endif
