#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "nisvp/projections.hpp"
#include "nisvp/solver.hpp"

namespace nisvp {

/// Parsed problem file. Files carry 1-based indices for human authorship;
/// conversion to 0-based happens in to_constraint_spec.
struct ProblemFile {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> sigma;  // descending after load

  enum class ConstraintKind { Diagonal, Entries, SymmetricDiagonal };
  ConstraintKind kind = ConstraintKind::Diagonal;
  std::vector<double> diagonal;
  std::vector<std::tuple<std::size_t, std::size_t, double>> entries;  // 1-based

  SolverConfig solver;
  std::optional<std::string> initial_path;
  std::vector<std::string> warnings;  // e.g. sigma re-sorted
};

/// Loads and validates a JSON problem file. Throws ParseError with position
/// diagnostics on malformed input, and the library's validation errors on
/// semantic problems (negative diagonal, out-of-bounds indices, ...).
ProblemFile load_problem(const std::string& path);

ConstraintSetSpec to_constraint_spec(const ProblemFile& problem);

/// Matrix CSV: one line per row, 17 significant digits, no header. Numbers
/// survive a write/read round trip bit for bit.
void write_matrix_csv(std::ostream& out, const DenseMatrix& a);
void write_matrix_csv(const std::string& path, const DenseMatrix& a);
DenseMatrix read_matrix_csv(const std::string& path);

/// Report file: JSON with status, iteration counts, residuals and wall time.
void write_report_json(const std::string& path, const SolveReport& report);

const char* status_name(SolveStatus status);

}  // namespace nisvp
