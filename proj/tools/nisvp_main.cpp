// Command-line front end: solve problem files, run feasibility checks, build
// 2x2 instances in closed form, and reproduce the randomized benchmark.

#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "nisvp/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Nonnegative matrices with prescribed singular values and "
               "prescribed entries, by successive projections"};
  app.require_subcommand(1);

  nisvp::SolveArgs solve_args;
  std::string solve_out, solve_report;
  auto* solve = app.add_subcommand("solve", "Solve a JSON problem file");
  solve->add_option("file", solve_args.problem_path, "Problem file")->required();
  solve->add_option("--out", solve_out, "Solution CSV path");
  solve->add_option("--report", solve_report, "Report JSON path");

  std::string check_path;
  auto* check = app.add_subcommand(
      "check", "Feasibility verdicts for a problem file's (sigma, diagonal)");
  check->add_option("file", check_path, "Problem file")->required();

  nisvp::Construct2x2Args c2_args;
  std::vector<double> c2_sigma, c2_diag;
  auto* construct = app.add_subcommand(
      "construct2x2", "Closed-form 2x2 matrix for given singular values and diagonal");
  construct->add_option("--sigma", c2_sigma, "Two singular values")
      ->required()->expected(2);
  construct->add_option("--diag", c2_diag, "Two diagonal entries")
      ->required()->expected(2);

  nisvp::BenchArgs bench_args;
  std::uint64_t bench_seed = 0;
  auto* bench = app.add_subcommand("bench", "Randomized benchmark, CSV output");
  bench->add_option("--sizes", bench_args.sizes, "Matrix sizes");
  bench->add_option("--trials", bench_args.trials, "Trials per size");
  auto* seed_opt = bench->add_option("--seed", bench_seed, "RNG seed");
  std::string bench_out;
  auto* bench_out_opt = bench->add_option("--out", bench_out, "CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? nisvp::kExitOk : nisvp::kExitUsage;
  }

  try {
    if (solve->parsed()) {
      if (!solve_out.empty()) solve_args.out_path = solve_out;
      if (!solve_report.empty()) solve_args.report_path = solve_report;
      return nisvp::cmd_solve(solve_args, std::cout, std::cerr);
    }
    if (check->parsed()) {
      return nisvp::cmd_check(check_path, std::cout, std::cerr);
    }
    if (construct->parsed()) {
      c2_args.sigma1 = c2_sigma[0];
      c2_args.sigma2 = c2_sigma[1];
      c2_args.d1 = c2_diag[0];
      c2_args.d2 = c2_diag[1];
      return nisvp::cmd_construct2x2(c2_args, std::cout, std::cerr);
    }
    if (bench->parsed()) {
      if (seed_opt->count() > 0) bench_args.seed = bench_seed;
      if (bench_out_opt->count() > 0) bench_args.out_path = bench_out;
      return nisvp::cmd_bench(bench_args, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return nisvp::kExitUsage;
  }
  return nisvp::kExitUsage;
}
