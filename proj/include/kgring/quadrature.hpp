#ifndef KGRING_QUADRATURE_HPP
#define KGRING_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace kgring::quad {

struct Rule {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;
};

// Gauss-Legendre nodes/weights on [-1,1], Newton iteration on P_n.
const Rule& gauss_legendre(int n);

// integral of f over [a, b] with an n-point Gauss-Legendre rule
double integrate(const std::function<double(double)>& f, double a, double b, int n = 400);

}  // namespace kgring::quad

#endif
