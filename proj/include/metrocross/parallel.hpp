#pragma once

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace metrocross {

// Execution mode for the data-parallel outer loops (optimizer multi-starts,
// sweep and surface grids). Serial is the reference path the OpenMP path is
// tested against; results are bitwise identical because every index writes
// only its own slot and the reduction order is fixed.
enum class ExecMode { Serial, OpenMP };

inline ExecMode& exec_mode_storage() {
#ifdef _OPENMP
  static ExecMode mode = ExecMode::OpenMP;
#else
  static ExecMode mode = ExecMode::Serial;
#endif
  return mode;
}

inline ExecMode default_exec_mode() { return exec_mode_storage(); }
inline void set_default_exec_mode(ExecMode mode) { exec_mode_storage() = mode; }

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <class F>
void parallel_for(std::ptrdiff_t n, F&& body, ExecMode mode) {
  std::exception_ptr first_error = nullptr;
  if (mode == ExecMode::OpenMP) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
#pragma omp critical(metrocross_parallel_for_error)
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
    return;
#endif
  }
  for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
}

template <class F>
void parallel_for(std::ptrdiff_t n, F&& body) {
  parallel_for(n, static_cast<F&&>(body), default_exec_mode());
}

}  // namespace metrocross
