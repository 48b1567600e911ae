#pragma once

#include <string>
#include <vector>

#include "bicentric/scene.hpp"

namespace bicentric {

struct SweepOptions {
  int n = 3;
  int winding = 1;
  double r_k = 1.0;
  double d = 0.0;
  int frames = 36;
  double tol = kDefaultTolerance;
  Exec exec = Exec::Parallel;
};

struct SweepSummary {
  double r_c = 0.0;
  double max_positional_defect = 0.0;   // worst frame closure gap, / r_k
  double max_excenter_deviation = 0.0;  // worst distance to frame-0's predicted circle, / r_k
  bool pass = false;
};

struct SweepResult {
  std::vector<BicentricScene> frames;
  SweepSummary summary;
};

// Solves the closure radius once, then builds one fully verified scene per
// equally spaced start angle. Frames are independent computations; the
// summary (start independence of closure, and every excenter staying on the
// one predicted circle) is folded serially after the join.
SweepResult run_sweep(const SweepOptions& options);

std::string summary_to_json(const SweepOptions& options, const SweepSummary& summary);

}  // namespace bicentric
