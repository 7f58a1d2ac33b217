#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cayley {

// Execution policy for the data-parallel kernels. Every kernel has a serial
// path that produces bit-identical results; the parallel path must match it
// regardless of thread count.
enum class Exec { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

// Fixed-chunk dot product: partial sums are computed per 4096-element chunk
// and combined in chunk order, so the result does not depend on the number
// of workers.
double det_dot(std::span<const double> a, std::span<const double> b, Exec exec);

inline double det_norm2(std::span<const double> v, Exec exec) {
  return det_dot(v, v, exec);
}

double det_sum(std::span<const double> v, Exec exec);

}  // namespace cayley
