#ifndef KGRING_PARALLEL_HPP
#define KGRING_PARALLEL_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kgring {

// Applies f(i) for i in [0, n). Iterations must be independent; results go
// into caller-owned per-index slots so serial and parallel runs are
// bit-identical. parallel = false is the serial reference path.
template <class F>
void parallel_for_index(std::size_t n, F&& f, bool parallel = true) {
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      f(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace kgring

#endif
