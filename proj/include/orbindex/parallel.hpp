#pragma once

#include <cstddef>
#include <exception>

#ifdef ORBINDEX_HAVE_OPENMP
#include <omp.h>
#endif

namespace orbindex {

// Run f(0..n-1), optionally across OpenMP threads. Work items must be
// independent; exact arithmetic keeps results identical to the serial path
// regardless of scheduling. The first exception is rethrown after the loop.
template <class F>
void parallel_for(std::size_t n, bool parallel, F&& f) {
#ifdef ORBINDEX_HAVE_OPENMP
  if (parallel && n > 1) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        f(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

inline int hardware_threads() {
#ifdef ORBINDEX_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace orbindex
