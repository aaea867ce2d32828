#include "kgring/model.hpp"

namespace kgring {

void ModelParams::validate() const {
  if (!(mu > 0.0)) throw std::invalid_argument("ModelParams: mu must be positive");
  if (!(a0 > 0.0)) throw std::invalid_argument("ModelParams: a0 must be positive");
  if (!(r0 > 0.0)) throw std::invalid_argument("ModelParams: r0 must be positive");
  if (!(beta >= 0.0)) throw std::invalid_argument("ModelParams: beta must be nonnegative");
  if (dim < 3) throw std::invalid_argument("ModelParams: dim must be >= 3");
}

DerivedCouplings derive_couplings(const ModelParams& p) {
  p.validate();
  return {p.a0 / (p.r0 * p.r0), p.a0 * p.r0 * p.r0, -2.0 * p.a0};
}

EnergyCouplings energy_couplings(const ModelParams& p, double E) {
  p.validate();
  if (!(E > -p.mu)) throw std::domain_error("energy_couplings: require E > -mu");
  return {p.mu - E, p.mu + E};
}

}  // namespace kgring
