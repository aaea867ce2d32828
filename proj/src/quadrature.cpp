#include "kgring/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace kgring::quad {

namespace {

Rule build_rule(int n) {
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-like initial guess for the i-th root of P_n
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // evaluate P_n and P_n' at x by recurrence
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  return r;
}

}  // namespace

const Rule& gauss_legendre(int n) {
  static std::map<int, Rule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

double integrate(const std::function<double(double)>& f, double a, double b, int n) {
  const Rule& r = gauss_legendre(n);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += r.w[i] * f(mid + half * r.x[i]);
  return s * half;
}

}  // namespace kgring::quad
