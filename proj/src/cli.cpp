#include "nisvp/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "nisvp/feasibility.hpp"
#include "nisvp/harness.hpp"
#include "nisvp/problem_io.hpp"
#include "nisvp/solver.hpp"

namespace nisvp {

namespace {

std::string default_sibling(const std::string& problem_path,
                            const char* suffix) {
  std::filesystem::path p(problem_path);
  p.replace_extension(suffix);
  return p.string();
}

void print_warnings(const ProblemFile& problem, std::ostream& err) {
  for (const std::string& w : problem.warnings) {
    err << "warning: " << w << '\n';
  }
}

}  // namespace

std::optional<std::uint64_t> seed_from_env() {
  const char* raw = std::getenv("NISVP_SEED");
  if (!raw || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') {
    throw ParseError(std::string("NISVP_SEED is not an unsigned integer: ") + raw);
  }
  return static_cast<std::uint64_t>(v);
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  ProblemFile problem;
  ConstraintSetSpec spec;
  std::optional<DenseMatrix> initial;
  try {
    problem = load_problem(args.problem_path);
    spec = to_constraint_spec(problem);
    if (const auto env_seed = seed_from_env()) {
      problem.solver.seed.value = *env_seed;
    }
    if (problem.initial_path) initial = read_matrix_csv(*problem.initial_path);
    if (initial && (initial->rows() != spec.rows || initial->cols() != spec.cols)) {
      throw ShapeMismatch("initial matrix does not match the problem shape");
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  print_warnings(problem, err);

  const SolveReport report =
      solve(spec, problem.solver, initial ? &*initial : nullptr);

  const std::string out_path =
      args.out_path.value_or(default_sibling(args.problem_path, ".solution.csv"));
  const std::string report_path =
      args.report_path.value_or(default_sibling(args.problem_path, ".report.json"));
  write_matrix_csv(out_path, report.final_matrix);
  write_report_json(report_path, report);

  out << "status: " << status_name(report.status) << '\n'
      << "iterations: " << report.iterations << '\n'
      << "restarts: " << report.restarts_used << '\n'
      << "spectrum residual: " << report.residuals.spectrum_residual << '\n'
      << "solution: " << out_path << '\n'
      << "report: " << report_path << '\n';

  return report.status == SolveStatus::Converged ? kExitOk : kExitBudget;
}

int cmd_check(const std::string& problem_path, std::ostream& out,
              std::ostream& err) {
  ProblemFile problem;
  try {
    problem = load_problem(problem_path);
    if (problem.kind == ProblemFile::ConstraintKind::Entries) {
      throw ParseError("check needs a diagonal target (constraint 'diagonal' "
                       "or 'symmetric_diagonal')");
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  print_warnings(problem, err);

  const SingularSpectrum sigma{problem.sigma};
  const DiagonalTarget d{problem.diagonal};

  bool all_feasible = true;
  const SingThompsonReport st = sing_thompson_feasible(sigma, d);
  out << "real: " << (st.feasible ? "feasible" : "infeasible");
  if (!st.feasible) {
    out << " (violated:";
    for (std::size_t k : st.violated) out << ' ' << k;
    out << ")";
    all_feasible = false;
  }
  out << '\n';

  if (problem.cols == 2) {
    const bool signed_diag =
        std::min(problem.diagonal[0], problem.diagonal[1]) < 0.0;
    if (signed_diag) {
      out << "nonnegative(2x2): not applicable (diagonal has negative entries)\n";
    } else {
      const TwoByTwoFeasibility verdict = nn2x2_feasible(sigma, d);
      switch (verdict) {
        case TwoByTwoFeasibility::FeasibleCase1:
          out << "nonnegative(2x2): feasible (case 1)\n";
          break;
        case TwoByTwoFeasibility::FeasibleCase2:
          out << "nonnegative(2x2): feasible (case 2)\n";
          break;
        case TwoByTwoFeasibility::Infeasible:
          out << "nonnegative(2x2): infeasible\n";
          all_feasible = false;
          break;
      }
    }
  }
  return all_feasible ? kExitOk : kExitInfeasible;
}

int cmd_construct2x2(const Construct2x2Args& args, std::ostream& out,
                     std::ostream& err) {
  try {
    const SingularSpectrum sigma =
        SingularSpectrum::sorted({args.sigma1, args.sigma2});
    const DiagonalTarget d{{args.d1, args.d2}};
    const TwoByTwoSolution sol = nn2x2_construct(sigma, d);
    write_matrix_csv(out, sol.assemble());
    return kExitOk;
  } catch (const InfeasibleInput& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  BenchmarkSpec spec;
  try {
    if (!args.sizes.empty()) spec.sizes = args.sizes;
    for (std::size_t n : spec.sizes) {
      if (n == 0) throw BadRange("bench: sizes must be >= 1");
    }
    if (args.trials == 0) throw BadRange("bench: trials must be >= 1");
    spec.trials = args.trials;
    if (args.seed) {
      spec.seed.value = *args.seed;
    } else if (const auto env_seed = seed_from_env()) {
      spec.seed.value = *env_seed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::vector<BenchmarkRow> rows = run_benchmark(spec);
  if (args.out_path) {
    std::ofstream file(*args.out_path);
    if (!file) {
      err << "error: cannot open for writing: " << *args.out_path << '\n';
      return kExitUsage;
    }
    write_benchmark_csv(file, rows);
  } else {
    write_benchmark_csv(out, rows);
  }
  return kExitOk;
}

}  // namespace nisvp
