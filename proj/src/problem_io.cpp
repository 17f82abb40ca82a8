#include "nisvp/problem_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nisvp {

namespace {

using nlohmann::json;

std::vector<double> to_doubles(const json& arr, const char* field) {
  if (!arr.is_array()) {
    throw ParseError(std::string("problem file: '") + field + "' must be an array");
  }
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) {
      throw ParseError(std::string("problem file: '") + field +
                       "' must contain numbers only");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file: " + path);

  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    // nlohmann reports the absolute byte offset; surface it as-is.
    throw ParseError(std::string("problem file ") + path + ": " + e.what());
  }

  ProblemFile p;
  if (!doc.contains("shape") || !doc["shape"].is_array() ||
      doc["shape"].size() != 2) {
    throw ParseError("problem file: 'shape' must be [rows, cols]");
  }
  const long long m = doc["shape"][0].get<long long>();
  const long long n = doc["shape"][1].get<long long>();
  if (m <= 0 || n <= 0 || m < n) {
    throw ParseError("problem file: shape must satisfy rows >= cols >= 1");
  }
  p.rows = static_cast<std::size_t>(m);
  p.cols = static_cast<std::size_t>(n);

  if (!doc.contains("sigma")) throw ParseError("problem file: missing 'sigma'");
  p.sigma = to_doubles(doc["sigma"], "sigma");
  if (p.sigma.size() != p.cols) {
    throw ParseError("problem file: sigma has " + std::to_string(p.sigma.size()) +
                     " values, expected " + std::to_string(p.cols));
  }
  for (double s : p.sigma) {
    if (s < 0.0 || !std::isfinite(s)) {
      throw ParseError("problem file: sigma values must be finite and >= 0");
    }
  }
  if (!std::is_sorted(p.sigma.rbegin(), p.sigma.rend())) {
    std::sort(p.sigma.begin(), p.sigma.end(), std::greater<double>());
    p.warnings.push_back("sigma was not descending; sorted it");
  }

  if (!doc.contains("constraint") || !doc["constraint"].is_object()) {
    throw ParseError("problem file: missing 'constraint' object");
  }
  const json& con = doc["constraint"];
  const int kinds = static_cast<int>(con.contains("diagonal")) +
                    static_cast<int>(con.contains("entries")) +
                    static_cast<int>(con.contains("symmetric_diagonal"));
  if (kinds != 1) {
    throw ParseError(
        "problem file: constraint must hold exactly one of 'diagonal', "
        "'entries', 'symmetric_diagonal'");
  }
  if (con.contains("diagonal") || con.contains("symmetric_diagonal")) {
    const bool sym = con.contains("symmetric_diagonal");
    p.kind = sym ? ProblemFile::ConstraintKind::SymmetricDiagonal
                 : ProblemFile::ConstraintKind::Diagonal;
    p.diagonal = to_doubles(con[sym ? "symmetric_diagonal" : "diagonal"],
                            sym ? "symmetric_diagonal" : "diagonal");
    if (p.diagonal.size() != p.cols) {
      throw ParseError("problem file: diagonal length must equal cols");
    }
  } else {
    p.kind = ProblemFile::ConstraintKind::Entries;
    for (const auto& e : con["entries"]) {
      if (!e.is_array() || e.size() != 3) {
        throw ParseError("problem file: each entry must be [i, j, value]");
      }
      const long long i = e[0].get<long long>();
      const long long j = e[1].get<long long>();
      const double v = e[2].get<double>();
      if (i < 1 || j < 1) {
        throw ParseError("problem file: entry indices are 1-based and >= 1");
      }
      p.entries.emplace_back(static_cast<std::size_t>(i),
                             static_cast<std::size_t>(j), v);
    }
  }

  if (doc.contains("solver")) {
    const json& s = doc["solver"];
    if (s.contains("epsilon")) p.solver.epsilon = s["epsilon"].get<double>();
    if (s.contains("max_iters")) p.solver.max_iters = s["max_iters"].get<std::size_t>();
    if (s.contains("max_restarts")) p.solver.max_restarts = s["max_restarts"].get<std::size_t>();
    if (s.contains("stagnation_window")) p.solver.stagnation_window = s["stagnation_window"].get<std::size_t>();
    if (s.contains("seed")) p.solver.seed.value = s["seed"].get<std::uint64_t>();
  }
  if (doc.contains("initial")) p.initial_path = doc["initial"].get<std::string>();
  return p;
}

ConstraintSetSpec to_constraint_spec(const ProblemFile& problem) {
  ConstraintSetSpec spec;
  spec.rows = problem.rows;
  spec.cols = problem.cols;
  spec.spectrum = SingularSpectrum{problem.sigma};
  spec.nonnegative = true;
  switch (problem.kind) {
    case ProblemFile::ConstraintKind::Diagonal:
      spec.entry_constraint = EntryConstraint::diagonal(problem.diagonal);
      break;
    case ProblemFile::ConstraintKind::SymmetricDiagonal:
      spec.entry_constraint = EntryConstraint::diagonal(problem.diagonal);
      spec.symmetric = true;
      break;
    case ProblemFile::ConstraintKind::Entries: {
      EntryConstraint c;
      for (const auto& [i, j, v] : problem.entries) {
        c.index_pairs.emplace_back(i - 1, j - 1);
        c.values.push_back(v);
      }
      spec.entry_constraint = std::move(c);
      break;
    }
  }
  spec.validate();
  return spec;
}

void write_matrix_csv(std::ostream& out, const DenseMatrix& a) {
  char buf[32];
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", a(i, j));
      if (j > 0) out << ',';
      out << buf;
    }
    out << '\n';
  }
}

void write_matrix_csv(const std::string& path, const DenseMatrix& a) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open for writing: " + path);
  write_matrix_csv(out, a);
}

DenseMatrix read_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
        if (used != cell.size() || !std::isfinite(v)) {
          throw std::invalid_argument(cell);
        }
        row.push_back(v);
      } catch (const std::exception&) {
        throw ParseError(path + ":" + std::to_string(lineno) +
                         ": bad number '" + cell + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": ragged row length");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(path + ": empty matrix file");
  DenseMatrix a(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = rows[i][j];
  }
  return a;
}

const char* status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::MaxIters: return "max_iters";
    case SolveStatus::Stagnated: return "stagnated";
  }
  return "unknown";
}

void write_report_json(const std::string& path, const SolveReport& report) {
  json residuals = {
      {"spectrum", report.residuals.spectrum_residual},
      {"negativity", report.residuals.negativity},
      {"entry", report.residuals.entry_residual},
  };
  if (report.residuals.asymmetry) {
    residuals["asymmetry"] = *report.residuals.asymmetry;
  }
  const json doc = {
      {"status", status_name(report.status)},
      {"iterations", report.iterations},
      {"restarts", report.restarts_used},
      {"residuals", residuals},
      {"wall_time_seconds", report.wall_time},
  };
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open for writing: " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace nisvp
