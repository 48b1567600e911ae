#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace bicentric {

// Execution policy for the data-parallel kernels. Parallel and Serial produce
// bit-identical results: slots are computed independently and every reduction
// over them runs serially afterwards, so no floating-point sum is ever
// reassociated by threading.
enum class Exec { Serial, Parallel };

// Evaluates fn(i) for i in [0, count) into a vector. The parallel path fans
// the iterations out across OpenMP threads; exceptions are captured per slot
// and the lowest-index one is rethrown after the join, which keeps error
// reporting deterministic as well.
template <typename T, typename Fn>
std::vector<T> map_indexed(std::size_t count, Fn&& fn, Exec exec) {
  std::vector<T> out(count);
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
    std::vector<std::exception_ptr> errors(count);
    #pragma omp parallel for
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      const std::size_t k = static_cast<std::size_t>(i);
      try {
        out[k] = fn(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    return out;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
  return out;
}

}  // namespace bicentric
