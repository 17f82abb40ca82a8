#include "nisvp/solver.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "nisvp/svd.hpp"

namespace nisvp {

namespace {

constexpr double kInitLo = 0.0;
constexpr double kInitHi = 10.0;

// The pointwise projection onto the intersection of the convex sets: clamp,
// overwrite prescribed entries, and for symmetric problems average with the
// transpose and re-clamp (the re-clamp never fires on nonnegative input).
void apply_convex_sets(DenseMatrix& a, const ConstraintSetSpec& spec) {
  if (spec.nonnegative) {
    for (double& v : a.data()) v = std::max(v, 0.0);
  }
  if (spec.entry_constraint) {
    const EntryConstraint& c = *spec.entry_constraint;
    for (std::size_t t = 0; t < c.size(); ++t) {
      a(c.index_pairs[t].first, c.index_pairs[t].second) = c.values[t];
    }
  }
  if (spec.symmetric) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = i + 1; j < a.cols(); ++j) {
        const double avg = 0.5 * (a(i, j) + a(j, i));
        a(i, j) = avg;
        a(j, i) = avg;
      }
    }
    if (spec.nonnegative) {
      for (double& v : a.data()) v = std::max(v, 0.0);
    }
  }
}

DenseMatrix fresh_iterate(const ConstraintSetSpec& spec, RngSeed seed) {
  DenseMatrix a = random_nonnegative(spec.rows, spec.cols, kInitLo, kInitHi, seed);
  apply_convex_sets(a, spec);
  return a;
}

// Spectrum projection reusing the previous iteration's right basis. One
// retry with a relative perturbation before letting NoConvergence escape.
ThinSvd robust_thin_svd(DenseMatrix& a, const DenseMatrix* v_warm,
                        RngSeed perturb_seed) {
  try {
    return compute_svd_thin(a, v_warm);
  } catch (const NoConvergence&) {
    const double scale = 1e-12 * (1.0 + frobenius_norm(a));
    Rng rng(perturb_seed);
    for (double& v : a.data()) v += scale * rng.next_double();
    return compute_svd_thin(a, nullptr);
  }
}

}  // namespace

SolveReport solve(const ConstraintSetSpec& spec, const SolverConfig& config,
                  const DenseMatrix* initial) {
  spec.validate();
  if (config.epsilon <= 0.0) throw BadRange("solve: epsilon must be positive");
  if (config.max_iters == 0) throw BadRange("solve: max_iters must be >= 1");
  if (initial && (initial->rows() != spec.rows || initial->cols() != spec.cols)) {
    throw ShapeMismatch("solve: initial iterate does not match problem shape");
  }

  const auto t0 = std::chrono::steady_clock::now();

  SolveReport report;
  if (config.record_trace) report.distance_trace.emplace();

  DenseMatrix a_new = initial ? *initial
                              : fresh_iterate(spec, Rng::derive(config.seed, 0, 0));
  apply_convex_sets(a_new, spec);

  DenseMatrix v_warm;  // empty until the first factorization
  double best_rel = std::numeric_limits<double>::infinity();
  std::size_t stalled = 0;

  while (true) {
    if (report.iterations >= config.max_iters) {
      report.status = SolveStatus::MaxIters;
      break;
    }
    const ThinSvd f = robust_thin_svd(
        a_new, v_warm.empty() ? nullptr : &v_warm,
        Rng::derive(config.seed, 1, report.iterations));
    v_warm = f.v;

    // Spectrum-side iterate: U * diag(sigma) * V^T.
    DenseMatrix a_old(spec.rows, spec.cols);
    for (std::size_t i = 0; i < spec.rows; ++i) {
      for (std::size_t k = 0; k < spec.cols; ++k) {
        const double scaled = f.u(i, k) * spec.spectrum.values[k];
        for (std::size_t j = 0; j < spec.cols; ++j) {
          a_old(i, j) += scaled * f.v(j, k);
        }
      }
    }

    a_new = a_old;
    apply_convex_sets(a_new, spec);
    ++report.iterations;

    const double dist = frobenius_norm(a_old - a_new);
    const double denom = frobenius_norm(a_old);
    // ||a_old|| equals ||sigma||_2 on the spectrum manifold; it vanishes only
    // for an all-zero target, where the absolute distance is the right test.
    const double rel = denom > 0.0 ? dist / denom : dist;
    if (report.distance_trace) report.distance_trace->push_back(dist);

    if (rel < config.epsilon) {
      report.status = SolveStatus::Converged;
      break;
    }

    if (rel < 0.999 * best_rel) {
      best_rel = rel;
      stalled = 0;
    } else if (++stalled >= config.stagnation_window) {
      if (report.restarts_used < config.max_restarts) {
        ++report.restarts_used;
        a_new = fresh_iterate(spec, Rng::derive(config.seed, 0, report.restarts_used));
        v_warm = DenseMatrix();
        best_rel = std::numeric_limits<double>::infinity();
        stalled = 0;
        if (report.distance_trace) report.distance_trace->clear();
      } else {
        report.status = SolveStatus::Stagnated;
        break;
      }
    }
  }

  report.final_matrix = a_new;
  report.residuals = project_membership_residuals(a_new, spec);
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

MonotoneCheck distance_trace_is_monotone(const SolveReport& report) {
  if (!report.distance_trace) {
    throw NoTrace("distance_trace_is_monotone: report has no trace");
  }
  const std::vector<double>& trace = *report.distance_trace;
  MonotoneCheck check;
  for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
    if (trace[i + 1] > trace[i] + 1e-12) {
      check.monotone = false;
      check.first_violation = i + 1;
      break;
    }
  }
  return check;
}

}  // namespace nisvp
