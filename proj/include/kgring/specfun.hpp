#ifndef KGRING_SPECFUN_HPP
#define KGRING_SPECFUN_HPP

namespace kgring::specfun {

// ln Gamma(x), x > 0 only (poles are never needed here).
double ln_gamma(double x);

// Generalized Laguerre polynomial L_n^{(a)}(x), a > -1, by the stable
// three-term recurrence. Non-integer a is the common case.
double laguerre(int n, double a, double x);

// Jacobi polynomial P_n^{(a,b)}(x), a,b > -1, three-term recurrence.
double jacobi(int n, double a, double b, double x);

enum class RodriguesKind { laguerre, jacobi_symmetric };

// Independent ground truth: evaluates the polynomial by n-fold symbolic
// differentiation of the Rodrigues weight product. Exact termwise expansion,
// restricted to n <= 12. For jacobi_symmetric, params = {a} with b = a.
double rodrigues_oracle(RodriguesKind kind, int n, double a, double x);

}  // namespace kgring::specfun

#endif
