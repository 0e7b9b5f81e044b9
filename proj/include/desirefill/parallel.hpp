#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace desirefill {

// Every parallel kernel in this project takes an Exec switch and has a serial
// reference path; results must be identical under both (asserted in tests).
// Work items write to disjoint, pre-sized slots, so no synchronization is
// needed beyond the join.
enum class Exec { Serial, Parallel };

template <typename Fn>
void for_each_index(Exec exec, std::ptrdiff_t n, Fn fn) {
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      fn(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)exec;
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    fn(static_cast<std::size_t>(i));
  }
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace desirefill
