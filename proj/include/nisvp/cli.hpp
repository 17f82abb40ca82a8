#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nisvp/matrix.hpp"

namespace nisvp {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitInfeasible = 3;

struct SolveArgs {
  std::string problem_path;
  std::optional<std::string> out_path;     // default: <problem>.solution.csv
  std::optional<std::string> report_path;  // default: <problem>.report.json
};

struct Construct2x2Args {
  double sigma1 = 0.0, sigma2 = 0.0;
  double d1 = 0.0, d2 = 0.0;
};

struct BenchArgs {
  std::vector<std::size_t> sizes;          // empty: {5, 10, 20, 100}
  std::size_t trials = 100;
  std::optional<std::uint64_t> seed;       // flag beats NISVP_SEED beats 0
  std::optional<std::string> out_path;     // default: stdout
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int cmd_check(const std::string& problem_path, std::ostream& out,
              std::ostream& err);
int cmd_construct2x2(const Construct2x2Args& args, std::ostream& out,
                     std::ostream& err);
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

/// NISVP_SEED environment override; throws ParseError on a malformed value.
std::optional<std::uint64_t> seed_from_env();

}  // namespace nisvp
