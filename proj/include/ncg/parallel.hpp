// Case-level parallelism.
//
// Harness suites evaluate many independent, individually seeded cases and
// keep the worst residual.  Because max is order-independent and each case
// derives its own seed, the OpenMP path returns bit-identical results to
// the serial reference, which is kept for testing and benchmarking.
#pragma once

#include <algorithm>
#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ncg {

// Reference implementation: plain loop, first exception propagates.
template <class F>
double max_over_cases_serial(int n, F&& residual) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) worst = std::max(worst, residual(i));
  return worst;
}

// OpenMP implementation; `threads` <= 0 means the runtime default.  Falls
// back to the serial loop when built without OpenMP.  Exceptions thrown by
// cases are captured inside the parallel region and rethrown after it.
template <class F>
double max_over_cases(int n, F&& residual, int threads = 0) {
#ifdef _OPENMP
  double worst = 0.0;
  std::exception_ptr failure = nullptr;
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) reduction(max : worst) num_threads(team)
  for (int i = 0; i < n; ++i) {
    try {
      worst = std::max(worst, residual(i));
    } catch (...) {
#pragma omp critical
      if (failure == nullptr) failure = std::current_exception();
    }
  }
  if (failure != nullptr) std::rethrow_exception(failure);
  return worst;
#else
  (void)threads;
  return max_over_cases_serial(n, std::forward<F>(residual));
#endif
}

}  // namespace ncg
