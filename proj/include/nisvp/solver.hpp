#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nisvp/matrix.hpp"
#include "nisvp/projections.hpp"

namespace nisvp {

struct SolverConfig {
  double epsilon = 1e-14;              // relative-change stopping threshold
  std::size_t max_iters = 100000;      // total budget across restarts
  std::size_t max_restarts = 5;
  std::size_t stagnation_window = 500; // iterations without 0.1% improvement
  bool record_trace = false;
  RngSeed seed;
};

enum class SolveStatus { Converged, MaxIters, Stagnated };

struct SolveReport {
  SolveStatus status = SolveStatus::MaxIters;
  std::size_t iterations = 0;   // total across all restart segments
  std::size_t restarts_used = 0;
  DenseMatrix final_matrix;
  MembershipResiduals residuals;
  /// Per-iteration distance between the spectrum-side iterate and its
  /// projection onto the entry/nonnegativity sets. Covers the last restart
  /// segment only (reset on restart). Present iff record_trace was set.
  std::optional<std::vector<double>> distance_trace;
  double wall_time = 0.0;       // seconds
};

/// Successive projections: spectrum projection, then clamp, then prescribed
/// entries (then symmetrize and re-clamp for symmetric problems), repeated
/// until the relative change drops below epsilon. Stagnating runs are
/// restarted from fresh random nonnegative iterates while restarts remain.
SolveReport solve(const ConstraintSetSpec& spec, const SolverConfig& config,
                  const DenseMatrix* initial = nullptr);

struct MonotoneCheck {
  bool monotone = true;
  std::optional<std::size_t> first_violation;  // index of the offending entry
};

/// Checks that the recorded distance trace is nonincreasing up to 1e-12
/// absolute slack. Throws NoTrace if the report has no trace.
MonotoneCheck distance_trace_is_monotone(const SolveReport& report);

}  // namespace nisvp
