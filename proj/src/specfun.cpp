#include "kgring/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace kgring::specfun {

double ln_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln_gamma: require x > 0");
  return std::lgamma(x);
}

double laguerre(int n, double a, double x) {
  if (n < 0) throw std::domain_error("laguerre: require n >= 0");
  if (!(a > -1.0)) throw std::domain_error("laguerre: require a > -1");
  if (!(x >= 0.0)) throw std::domain_error("laguerre: require x >= 0");
  if (n == 0) return 1.0;
  double lm1 = 1.0;            // L_0
  double l = 1.0 + a - x;      // L_1
  for (int k = 2; k <= n; ++k) {
    double lp = ((2.0 * k - 1.0 + a - x) * l - (k - 1.0 + a) * lm1) / k;
    lm1 = l;
    l = lp;
  }
  return l;
}

double jacobi(int n, double a, double b, double x) {
  if (n < 0) throw std::domain_error("jacobi: require n >= 0");
  if (!(a > -1.0) || !(b > -1.0)) throw std::domain_error("jacobi: require a,b > -1");
  if (n == 0) return 1.0;
  double pm1 = 1.0;                                      // P_0
  double p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;    // P_1
  for (int k = 2; k <= n; ++k) {
    double c = 2.0 * k + a + b;
    double a1 = 2.0 * k * (k + a + b) * (c - 2.0);
    double a2 = (c - 1.0) * (a * a - b * b);
    double a3 = (c - 1.0) * c * (c - 2.0);
    double a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c;
    double pp = ((a2 + a3 * x) * p - a4 * pm1) / a1;
    pm1 = p;
    p = pp;
  }
  return p;
}

namespace {

// Rodrigues for Laguerre: L_n^{(a)}(x) = x^{-a} e^x / n! d^n/dx^n [e^{-x} x^{n+a}].
// Terms are c_j x^{a+j} e^{-x}; differentiation shifts j by -1 or keeps it.
double rodrigues_laguerre(int n, double a, double x) {
  std::vector<double> coef(n + 1, 0.0);
  coef[n] = 1.0;  // x^{a+n} e^{-x}
  for (int d = 0; d < n; ++d) {
    std::vector<double> next(n + 1, 0.0);
    for (int j = 0; j <= n; ++j) {
      if (coef[j] == 0.0) continue;
      if (j > 0) next[j - 1] += coef[j] * (a + j);
      next[j] -= coef[j];
    }
    coef.swap(next);
  }
  // times x^{-a} e^{x}: the x^{a} and exponential factors cancel
  double s = 0.0;
  for (int j = n; j >= 0; --j) s = s * x + coef[j];
  double nfact = std::tgamma(n + 1.0);
  return s / nfact;
}

// Rodrigues for symmetric Jacobi:
// P_n^{(a,a)}(x) = (-1)^n / (2^n n!) (1-x^2)^{-a} d^n/dx^n (1-x^2)^{n+a}.
// Terms are c_{ij} (1-x)^{a+i} (1+x)^{a+j}.
double rodrigues_jacobi_symmetric(int n, double a, double x) {
  int m = n + 1;
  std::vector<double> coef(m * m, 0.0);
  coef[n * m + n] = 1.0;  // (1-x)^{a+n}(1+x)^{a+n}
  for (int d = 0; d < n; ++d) {
    std::vector<double> next(m * m, 0.0);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        double c = coef[i * m + j];
        if (c == 0.0) continue;
        if (i > 0) next[(i - 1) * m + j] -= c * (a + i);
        if (j > 0) next[i * m + (j - 1)] += c * (a + j);
      }
    coef.swap(next);
  }
  double u = 1.0 - x, v = 1.0 + x;
  double s = 0.0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      double c = coef[i * m + j];
      if (c == 0.0) continue;
      s += c * std::pow(u, i) * std::pow(v, j);
    }
  double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * s / (std::pow(2.0, n) * std::tgamma(n + 1.0));
}

}  // namespace

double rodrigues_oracle(RodriguesKind kind, int n, double a, double x) {
  if (n < 0 || n > 12) throw std::domain_error("rodrigues_oracle: require 0 <= n <= 12");
  switch (kind) {
    case RodriguesKind::laguerre:
      return rodrigues_laguerre(n, a, x);
    case RodriguesKind::jacobi_symmetric:
      return rodrigues_jacobi_symmetric(n, a, x);
  }
  throw std::logic_error("rodrigues_oracle: unknown kind");
}

}  // namespace kgring::specfun
