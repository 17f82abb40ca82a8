#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nisvp/cli.hpp"
#include "nisvp/problem_io.hpp"
#include "nisvp/solver.hpp"
#include "nisvp/svd.hpp"

using namespace nisvp;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "nisvp_cli_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path path = temp_dir() / name;
  std::ofstream out(path);
  out << text;
  return path;
}

const char* kStructuredProblem = R"({
  "shape": [6, 5],
  "sigma": [3.3108, 1.2723, 0.9786, 0.5334, 0.2780],
  "constraint": {"entries": [
    [1, 2, 1], [1, 3, 0], [1, 4, 1], [1, 5, 0],
    [2, 5, 1],
    [3, 1, 0], [3, 2, 0], [3, 4, 1], [3, 5, 0],
    [4, 1, 0], [4, 5, 1]
  ]},
  "solver": {"seed": 7}
})";

}  // namespace

TEST_CASE("solve writes a solution whose residuals match the report") {
  const fs::path problem = write_file("structured.json", kStructuredProblem);
  SolveArgs args;
  args.problem_path = problem.string();
  args.out_path = (temp_dir() / "structured_solution.csv").string();
  args.report_path = (temp_dir() / "structured_report.json").string();

  std::ostringstream out, err;
  const int code = cmd_solve(args, out, err);
  CHECK(code == kExitOk);
  CHECK(out.str().find("status: converged") != std::string::npos);

  // Round trip: the written matrix reproduces the residuals in the report.
  const DenseMatrix solution = read_matrix_csv(*args.out_path);
  const ProblemFile parsed = load_problem(problem.string());
  const MembershipResiduals residuals =
      project_membership_residuals(solution, to_constraint_spec(parsed));
  CHECK(residuals.spectrum_residual <= 1e-10);
  CHECK(residuals.entry_residual <= 1e-12);
  CHECK(residuals.negativity <= 1e-12);

  std::ifstream report_in(*args.report_path);
  const nlohmann::json report = nlohmann::json::parse(report_in);
  CHECK(report["status"] == "converged");
  CHECK(std::abs(report["residuals"]["spectrum"].get<double>() -
                 residuals.spectrum_residual) <= 1e-12);
  CHECK(std::abs(report["residuals"]["entry"].get<double>() -
                 residuals.entry_residual) <= 1e-12);
  CHECK(std::abs(report["residuals"]["negativity"].get<double>() -
                 residuals.negativity) <= 1e-12);
}

TEST_CASE("matrix csv survives a write/read round trip bit for bit") {
  DenseMatrix a(7, 3);
  Rng rng(RngSeed{271828});
  for (double& v : a.data()) v = rng.uniform(-1e6, 1e6) * std::exp(rng.uniform(-20.0, 20.0));
  const fs::path path = temp_dir() / "roundtrip.csv";
  write_matrix_csv(path.string(), a);
  CHECK(read_matrix_csv(path.string()) == a);
}

TEST_CASE("solve rejects a negative diagonal with exit 1") {
  const fs::path problem = write_file("negative.json", R"({
    "shape": [2, 2],
    "sigma": [3, 1],
    "constraint": {"diagonal": [1, -1]}
  })");
  SolveArgs args;
  args.problem_path = problem.string();
  std::ostringstream out, err;
  CHECK(cmd_solve(args, out, err) == kExitUsage);
  CHECK(err.str().find("nonnegativity") != std::string::npos);
}

TEST_CASE("solve honors an explicit initial matrix") {
  const fs::path init = temp_dir() / "init.csv";
  write_matrix_csv(init.string(), DenseMatrix::from_rows({{3, 0}, {0, 1}}));
  const fs::path problem = write_file("fixed_point.json", std::string(R"({
    "shape": [2, 2],
    "sigma": [3, 1],
    "constraint": {"diagonal": [3, 1]},
    "initial": ")") + init.string() + "\"\n}");
  SolveArgs args;
  args.problem_path = problem.string();
  args.out_path = (temp_dir() / "fixed_point.solution.csv").string();
  args.report_path = (temp_dir() / "fixed_point.report.json").string();
  std::ostringstream out, err;
  CHECK(cmd_solve(args, out, err) == kExitOk);
  CHECK(out.str().find("iterations: 1") != std::string::npos);
}

namespace {

// A 2x2 target taken from an asymmetric matrix, so the alternation converges
// quickly; sigma is emitted in ascending order when asked.
std::string feasible_2x2_json(bool ascending_sigma) {
  const DenseMatrix g = DenseMatrix::from_rows({{2, 7}, {1, 4}});
  const std::vector<double> sv = singular_values_only(g);
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "{\"shape\":[2,2],\"sigma\":[%.17g,%.17g],"
                "\"constraint\":{\"diagonal\":[2,4]},\"solver\":{\"seed\":3}}",
                ascending_sigma ? sv[1] : sv[0], ascending_sigma ? sv[0] : sv[1]);
  return buf;
}

}  // namespace

TEST_CASE("unsorted sigma is sorted with a warning") {
  const fs::path problem = write_file("unsorted.json", feasible_2x2_json(true));
  std::ostringstream out, err;
  CHECK(cmd_solve(SolveArgs{problem.string(),
                            (temp_dir() / "u.csv").string(),
                            (temp_dir() / "u.json").string()},
                  out, err) == kExitOk);
  CHECK(err.str().find("sorted") != std::string::npos);
}

TEST_CASE("check prints both verdicts for 2x2 problems") {
  const fs::path mixed = write_file("mixed.json", R"({
    "shape": [2, 2],
    "sigma": [3, 1],
    "constraint": {"diagonal": [2, 1]}
  })");
  std::ostringstream out, err;
  CHECK(cmd_check(mixed.string(), out, err) == kExitInfeasible);
  CHECK(out.str().find("real: feasible") != std::string::npos);
  CHECK(out.str().find("nonnegative(2x2): infeasible") != std::string::npos);

  const fs::path same = write_file("same.json", R"({
    "shape": [3, 3],
    "sigma": [4, 2, 1],
    "constraint": {"diagonal": [4, 2, 1]}
  })");
  std::ostringstream out2, err2;
  CHECK(cmd_check(same.string(), out2, err2) == kExitOk);
  CHECK(out2.str().find("real: feasible") != std::string::npos);

  const fs::path broken = write_file("broken.json", R"({
    "shape": [3, 3],
    "sigma": [4, 2],
    "constraint": {"diagonal": [4, 2, 1]}
  })");
  std::ostringstream out3, err3;
  CHECK(cmd_check(broken.string(), out3, err3) == kExitUsage);
}

TEST_CASE("construct2x2 exit codes and output") {
  std::ostringstream out, err;
  CHECK(cmd_construct2x2(Construct2x2Args{3, 1, 1, 1}, out, err) == kExitOk);
  CHECK(out.str() == "1,2\n2,1\n");

  std::ostringstream out2, err2;
  CHECK(cmd_construct2x2(Construct2x2Args{5, 5, 5, 5}, out2, err2) == kExitOk);
  CHECK(out2.str() == "5,0\n0,5\n");

  std::ostringstream out3, err3;
  CHECK(cmd_construct2x2(Construct2x2Args{3, 1, 2, 1}, out3, err3) ==
        kExitInfeasible);

  std::ostringstream out4, err4;
  CHECK(cmd_construct2x2(Construct2x2Args{3, 1, -2, 1}, out4, err4) ==
        kExitUsage);
}

TEST_CASE("bench emits one row per size and is reproducible") {
  BenchArgs args;
  args.sizes = {5};
  args.trials = 2;
  args.seed = 42;
  std::ostringstream out, err;
  CHECK(cmd_bench(args, out, err) == kExitOk);
  std::ostringstream out2, err2;
  CHECK(cmd_bench(args, out2, err2) == kExitOk);

  // Timing columns aside, reruns agree byte for byte.
  auto strip_times = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string line, kept;
    while (std::getline(in, line)) {
      std::size_t field = 0, start = 0;
      for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
          if (field < 4 || field == 7) kept += line.substr(start, i - start) + ",";
          start = i + 1;
          ++field;
        }
      }
      kept += "\n";
    }
    return kept;
  };
  CHECK(strip_times(out.str()) == strip_times(out2.str()));
  CHECK(out.str().rfind("n,minit,maxit,aveit,mint,maxt,avet,success_rate\n", 0) == 0);
}

TEST_CASE("NISVP_SEED overrides the problem file seed") {
  const fs::path problem = write_file("seeded.json", R"({
    "shape": [3, 3],
    "sigma": [5, 2, 1],
    "constraint": {"diagonal": [2, 2, 1]},
    "solver": {"seed": 1}
  })");
  const auto solve_with_env = [&](const char* env) {
    if (env) {
      setenv("NISVP_SEED", env, 1);
    } else {
      unsetenv("NISVP_SEED");
    }
    SolveArgs args;
    args.problem_path = problem.string();
    args.out_path = (temp_dir() / "seeded.csv").string();
    args.report_path = (temp_dir() / "seeded.json.out").string();
    std::ostringstream out, err;
    const int code = cmd_solve(args, out, err);
    unsetenv("NISVP_SEED");
    REQUIRE(code == kExitOk);
    return read_matrix_csv(*args.out_path);
  };
  const DenseMatrix with_env_a = solve_with_env("424242");
  const DenseMatrix with_env_b = solve_with_env("424242");
  const DenseMatrix file_seed = solve_with_env(nullptr);
  CHECK(with_env_a == with_env_b);
  CHECK_FALSE(with_env_a == file_seed);

  setenv("NISVP_SEED", "not-a-number", 1);
  CHECK_THROWS_AS(seed_from_env(), ParseError);
  unsetenv("NISVP_SEED");
}

TEST_CASE("binary smoke test") {
  const fs::path problem = write_file("smoke.json", feasible_2x2_json(false));
  const std::string sol = (temp_dir() / "smoke.solution.csv").string();
  const std::string rep = (temp_dir() / "smoke.report.json").string();

  const std::string solve_cmd = std::string(NISVP_CLI_PATH) + " solve " +
                                problem.string() + " --out " + sol +
                                " --report " + rep + " > /dev/null 2>&1";
  CHECK(std::system(solve_cmd.c_str()) == 0);
  CHECK(fs::exists(sol));

  const std::string infeasible_cmd =
      std::string(NISVP_CLI_PATH) +
      " construct2x2 --sigma 3 1 --diag 2 1 > /dev/null 2>&1";
  const int raw = std::system(infeasible_cmd.c_str());
  CHECK(WEXITSTATUS(raw) == kExitInfeasible);

  const std::string usage_cmd =
      std::string(NISVP_CLI_PATH) + " nonsense > /dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(usage_cmd.c_str())) == kExitUsage);

  const std::string bench_csv = (temp_dir() / "smoke_bench.csv").string();
  const std::string bench_cmd = std::string(NISVP_CLI_PATH) +
                                " bench --sizes 3 --trials 1 --seed 1 --out " +
                                bench_csv + " > /dev/null 2>&1";
  CHECK(std::system(bench_cmd.c_str()) == 0);
  CHECK(fs::exists(bench_csv));
}
