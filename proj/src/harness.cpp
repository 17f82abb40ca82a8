#include "nisvp/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "nisvp/svd.hpp"

namespace nisvp {

std::vector<TrialRecord> run_benchmark_size(const BenchmarkSpec& spec,
                                            std::size_t n) {
  if (spec.trials == 0) throw BadRange("run_benchmark: trials must be >= 1");
  std::vector<TrialRecord> records;
  records.reserve(spec.trials);

  for (std::size_t t = 0; t < spec.trials; ++t) {
    // Three independent streams per trial: instance, initial iterate, solver.
    const DenseMatrix g = random_nonnegative(n, n, spec.lo, spec.hi,
                                             Rng::derive(spec.seed, n, 3 * t));
    SingularSpectrum target{singular_values_only(g)};
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = g(i, i);

    ConstraintSetSpec problem;
    problem.rows = n;
    problem.cols = n;
    problem.spectrum = std::move(target);
    problem.entry_constraint = EntryConstraint::diagonal(diag);

    const DenseMatrix initial = random_nonnegative(
        n, n, spec.lo, spec.hi, Rng::derive(spec.seed, n, 3 * t + 1));

    SolverConfig config = spec.solver;
    config.seed = Rng::derive(spec.seed, n, 3 * t + 2);

    const SolveReport report = solve(problem, config, &initial);
    records.push_back(TrialRecord{report.iterations, report.wall_time,
                                  report.status == SolveStatus::Converged});
  }
  return records;
}

BenchmarkRow aggregate_trials(std::size_t n,
                              const std::vector<TrialRecord>& records) {
  if (records.empty()) throw BadRange("aggregate_trials: no records");
  std::size_t converged = 0;
  for (const TrialRecord& r : records) converged += r.converged ? 1 : 0;

  BenchmarkRow row;
  row.n = n;
  row.success_rate = 100.0 * static_cast<double>(converged) /
                     static_cast<double>(records.size());

  row.minit = std::numeric_limits<std::size_t>::max();
  row.mint = std::numeric_limits<double>::infinity();
  double iter_sum = 0.0, time_sum = 0.0;
  std::size_t counted = 0;
  for (const TrialRecord& r : records) {
    if (converged > 0 && !r.converged) continue;  // stats describe solutions
    row.minit = std::min(row.minit, r.iterations);
    row.maxit = std::max(row.maxit, r.iterations);
    row.mint = std::min(row.mint, r.seconds);
    row.maxt = std::max(row.maxt, r.seconds);
    iter_sum += static_cast<double>(r.iterations);
    time_sum += r.seconds;
    ++counted;
  }
  row.aveit = iter_sum / static_cast<double>(counted);
  row.avet = time_sum / static_cast<double>(counted);
  return row;
}

std::vector<BenchmarkRow> run_benchmark(const BenchmarkSpec& spec) {
  std::vector<BenchmarkRow> rows;
  rows.reserve(spec.sizes.size());
  for (std::size_t n : spec.sizes) {
    rows.push_back(aggregate_trials(n, run_benchmark_size(spec, n)));
  }
  return rows;
}

void write_benchmark_csv(std::ostream& out,
                         const std::vector<BenchmarkRow>& rows) {
  out << "n,minit,maxit,aveit,mint,maxt,avet,success_rate\n";
  char buf[160];
  for (const BenchmarkRow& row : rows) {
    std::snprintf(buf, sizeof(buf), "%zu,%zu,%zu,%.6g,%.4f,%.4f,%.4f,%.6g\n",
                  row.n, row.minit, row.maxit, row.aveit, row.mint, row.maxt,
                  row.avet, row.success_rate);
    out << buf;
  }
}

namespace {

// Singular values of [[d1,b],[c,d2]] in closed form, via the invariants
// s1^2+s2^2 = d1^2+d2^2+b^2+c^2 and s1*s2 = |d1*d2 - b*c|.
void sv_2x2(double d1, double b, double c, double d2, double& s1, double& s2) {
  const double t = d1 * d1 + b * b + c * c + d2 * d2;
  const double det = d1 * d2 - b * c;
  const double disc = std::sqrt(std::max(t * t - 4.0 * det * det, 0.0));
  const double e1 = 0.5 * (t + disc);
  s1 = std::sqrt(e1);
  s2 = s1 > 0.0 ? std::abs(det) / s1 : 0.0;
}

}  // namespace

GridSearchResult oracle_2x2_search(const SingularSpectrum& sigma,
                                   const DiagonalTarget& d, double grid_step,
                                   double tolerance) {
  if (sigma.values.size() != 2 || d.values.size() != 2) {
    throw LengthMismatch("oracle_2x2_search: inputs must have length 2");
  }
  if (grid_step <= 0.0) throw BadRange("oracle_2x2_search: grid_step <= 0");

  const double s1 = std::max(sigma.values[0], sigma.values[1]);
  const double s2 = std::min(sigma.values[0], sigma.values[1]);
  const double d1 = std::max(d.values[0], d.values[1]);
  const double d2 = std::min(d.values[0], d.values[1]);
  const double hi = s1 + s2;
  const auto steps = static_cast<std::size_t>(std::floor(hi / grid_step)) + 1;

  GridSearchResult best;
  best.residual = std::numeric_limits<double>::infinity();
  for (std::size_t ib = 0; ib < steps; ++ib) {
    const double b = static_cast<double>(ib) * grid_step;
    for (std::size_t ic = 0; ic <= ib; ++ic) {  // b >= c covers transposes
      const double c = static_cast<double>(ic) * grid_step;
      double t1, t2;
      sv_2x2(d1, b, c, d2, t1, t2);
      const double residual = std::hypot(t1 - s1, t2 - s2);
      if (residual < best.residual) {
        best = GridSearchResult{b, c, residual};
        if (residual <= tolerance) return best;
      }
    }
  }
  return best;
}

}  // namespace nisvp
