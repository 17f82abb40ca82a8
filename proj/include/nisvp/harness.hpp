#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "nisvp/feasibility.hpp"
#include "nisvp/solver.hpp"

namespace nisvp {

/// Randomized experiment protocol: per trial, a random nonnegative n-by-n
/// matrix supplies a feasible (sigma, diagonal) target and an independent
/// random matrix supplies the initial iterate.
struct BenchmarkSpec {
  std::vector<std::size_t> sizes = {5, 10, 20, 100};
  std::size_t trials = 100;
  double lo = 0.0;
  double hi = 10.0;
  SolverConfig solver;
  RngSeed seed;
};

struct TrialRecord {
  std::size_t iterations = 0;
  double seconds = 0.0;
  bool converged = false;
};

struct BenchmarkRow {
  std::size_t n = 0;
  std::size_t minit = 0;
  std::size_t maxit = 0;
  double aveit = 0.0;
  double mint = 0.0;
  double maxt = 0.0;
  double avet = 0.0;
  double success_rate = 0.0;  // percent
};

/// All trials for one size. Per-trial RNG streams derive from
/// (seed, n, trial), so the schedule cannot change the statistics.
std::vector<TrialRecord> run_benchmark_size(const BenchmarkSpec& spec,
                                            std::size_t n);

/// Iteration/time statistics over the converged trials (over all trials if
/// none converged), success rate over all of them.
BenchmarkRow aggregate_trials(std::size_t n,
                              const std::vector<TrialRecord>& records);

std::vector<BenchmarkRow> run_benchmark(const BenchmarkSpec& spec);

/// CSV with header n,minit,maxit,aveit,mint,maxt,avet,success_rate.
void write_benchmark_csv(std::ostream& out,
                         const std::vector<BenchmarkRow>& rows);

struct GridSearchResult {
  double b = 0.0;
  double c = 0.0;
  double residual = 0.0;
};

/// Exhaustive grid over b >= c in [0, sigma1+sigma2] minimizing the distance
/// between the singular values of [[d1,b],[c,d2]] and the target. Uses the
/// closed-form 2x2 singular values, independent of the SVD kernel, so it can
/// cross-check the constructive formulas. Stops early once the residual
/// drops to `tolerance`.
GridSearchResult oracle_2x2_search(const SingularSpectrum& sigma,
                                   const DiagonalTarget& d, double grid_step,
                                   double tolerance);

}  // namespace nisvp
