#ifndef KGRING_ANGULAR_HPP
#define KGRING_ANGULAR_HPP

#include <complex>
#include <vector>

namespace kgring {

// Quantum numbers of one level in D dimensions. The cascade holds
// l~_2 <= l~_3 <= ... <= l~_{D-2}; it is empty for D = 3, where the top
// cascade index degenerates to |m|.
struct QuantumNumbers {
  int n = 0;        // radial node index
  int n_polar = 0;  // paper's n_{D-1}
  int m = 0;        // azimuthal
  std::vector<int> cascade;

  void validate(int D) const;
  // l~_{D-2}: the channel entering the polar equation
  int top_l(int D) const;
};

// Energy-dependent angular shifts of the ring-shaped term.
struct AngularShift {
  double m_prime;   // sqrt((l~_{D-2}+(D-3)/2)^2 + alpha2^2 beta)
  double l_tilde;   // effective (generally non-integer) angular momentum
  double l_prime;   // n_polar + m_prime
  double lambda_l;  // l~ (l~ + D - 2)
};

namespace angular {

std::complex<double> azimuthal_wave(int m, double phi);

double m_prime(int l_sub, int D, double alpha2_sq, double beta);

// Computes m', l~, l' and the separation constant for this level. Throws
// std::domain_error when (n_polar + m' + 1/2)^2 < alpha2^2 beta (no real
// channel at this energy).
AngularShift effective_l(const QuantumNumbers& qn, int D, double alpha2_sq, double beta);

// Intermediate cascade eigenfunction H_{n_j}(theta_j), j in [2, D-2],
// unit-normalized under weight (sin theta)^{j-1} by quadrature.
double cascade_wave(int j, int n_j, int l_prev, double theta);

// Printed normalization constant of the cascade eigenfunction; kept for
// comparison with the quadrature value (the two disagree, see tests).
double cascade_norm_printed(int j, int n_j, int l_prev);
double cascade_norm_quadrature(int j, int n_j, int l_prev);

// Polar eigenfunction H_{n_polar}(theta_{D-1}), unit-normalized under
// weight (sin theta)^{D-2} by quadrature. Jacobi order is shift.m_prime.
double polar_wave(int n_polar, const AngularShift& shift, int D, double theta);

double polar_norm_printed(int n_polar, const AngularShift& shift);
double polar_norm_quadrature(int n_polar, const AngularShift& shift, int D);

}  // namespace angular
}  // namespace kgring

#endif
