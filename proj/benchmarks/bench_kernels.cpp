// Times the data-parallel kernels against their serial reference and checks
// that both produce bit-identical output. Exit code counts mismatches.
//
//   bench_kernels [--quick]
#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "bicentric/scene.hpp"
#include "bicentric/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace bicentric;

namespace {

template <typename Fn>
double time_best_of(int repeats, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void print_row(const char* kernel, int work, double serial_ms, double parallel_ms, bool match) {
  std::printf("%-28s %10d %12.3f %12.3f %9.2fx   %s\n", kernel, work, serial_ms, parallel_ms,
              serial_ms / parallel_ms, match ? "bitwise equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const int repeats = quick ? 2 : 5;

#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp not enabled; parallel path falls back to serial\n");
#endif
  std::printf("%-28s %10s %12s %12s %10s\n", "kernel", "work", "serial ms", "parallel ms",
              "speedup");

  int mismatches = 0;

  {
    // closure-defect sampling: one tangent-chord orbit per start angle
    const CirclePair pair = solve_closure_rc(12, 5, 1.0, 0.05);
    const int samples = quick ? 2000 : 20000;
    double serial_value = 0.0;
    double parallel_value = 0.0;
    const double serial_ms = time_best_of(
        repeats, [&] { serial_value = closure_defect(pair, 12, 5, samples, Exec::Serial); });
    const double parallel_ms = time_best_of(
        repeats, [&] { parallel_value = closure_defect(pair, 12, 5, samples, Exec::Parallel); });
    const bool match = std::memcmp(&serial_value, &parallel_value, sizeof serial_value) == 0;
    if (!match) ++mismatches;
    print_row("closure_defect samples", samples, serial_ms, parallel_ms, match);
  }

  {
    // sweep frames: trace + excenters + full verification per start angle
    SweepOptions opt;
    opt.n = 9;
    opt.winding = 2;
    opt.r_k = 1.0;
    opt.d = 0.1;
    opt.frames = quick ? 60 : 600;

    opt.exec = Exec::Serial;
    SweepResult serial_result;
    const double serial_ms = time_best_of(repeats, [&] { serial_result = run_sweep(opt); });

    opt.exec = Exec::Parallel;
    SweepResult parallel_result;
    const double parallel_ms = time_best_of(repeats, [&] { parallel_result = run_sweep(opt); });

    bool match = serial_result.frames.size() == parallel_result.frames.size();
    for (std::size_t i = 0; match && i < serial_result.frames.size(); ++i) {
      match = scene_to_json(serial_result.frames[i]) == scene_to_json(parallel_result.frames[i]);
    }
    match = match && summary_to_json(opt, serial_result.summary) ==
                         summary_to_json(opt, parallel_result.summary);
    if (!match) ++mismatches;
    print_row("sweep frame construction", opt.frames, serial_ms, parallel_ms, match);
  }

  if (mismatches != 0) {
    std::printf("parallel output diverged from the serial reference\n");
  }
  return mismatches;
}
