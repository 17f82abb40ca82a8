#include "nisvp/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nisvp {

namespace {

// Inequalities within this slack of tight count as satisfied; the equality
// cases are all realizable (symmetric or diagonal solutions).
constexpr double kFeasSlack = 1e-12;

bool geq(double lhs, double rhs) { return lhs >= rhs - kFeasSlack; }

struct SortedPair {
  double s1, s2, d1, d2;
};

SortedPair sorted_two(const SingularSpectrum& sigma, const DiagonalTarget& d,
                      const char* who) {
  if (sigma.values.size() != 2 || d.values.size() != 2) {
    throw LengthMismatch(std::string(who) + ": inputs must have length 2");
  }
  for (double v : d.values) {
    if (v < 0.0) throw NegativeDiagonal(std::string(who) + ": diagonal < 0");
  }
  for (double v : sigma.values) {
    if (v < 0.0) throw BadRange(std::string(who) + ": singular value < 0");
  }
  SortedPair p{sigma.values[0], sigma.values[1], d.values[0], d.values[1]};
  if (p.s1 < p.s2) std::swap(p.s1, p.s2);
  if (p.d1 < p.d2) std::swap(p.d1, p.d2);
  return p;
}

}  // namespace

void SingularSpectrum::validate() const {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0.0) {
      throw BadRange("SingularSpectrum: negative value at index " +
                     std::to_string(i));
    }
    if (i > 0 && values[i] > values[i - 1]) {
      throw BadRange("SingularSpectrum: not descending at index " +
                     std::to_string(i));
    }
  }
}

SingularSpectrum SingularSpectrum::sorted(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<double>());
  SingularSpectrum s{std::move(values)};
  s.validate();
  return s;
}

SingThompsonReport sing_thompson_feasible(const SingularSpectrum& sigma,
                                          const DiagonalTarget& d) {
  sigma.validate();
  const std::size_t n = sigma.values.size();
  if (n == 0 || d.values.size() != n) {
    throw LengthMismatch("sing_thompson_feasible: lengths " +
                         std::to_string(n) + " vs " +
                         std::to_string(d.values.size()));
  }

  // The Sing-Thompson conditions allow the diagonal in any order, so test
  // against |d| sorted descending.
  std::vector<double> dabs(n);
  for (std::size_t i = 0; i < n; ++i) dabs[i] = std::abs(d.values[i]);
  std::sort(dabs.begin(), dabs.end(), std::greater<double>());

  SingThompsonReport report;
  double dsum = 0.0, ssum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    dsum += dabs[k];
    ssum += sigma.values[k];
    if (!geq(ssum, dsum)) report.violated.push_back(k + 1);
  }
  // Last inequality flips the smallest terms on both sides.
  const double lhs = dsum - 2.0 * dabs[n - 1];
  const double rhs = ssum - 2.0 * sigma.values[n - 1];
  if (!geq(rhs, lhs)) report.violated.push_back(n + 1);

  report.feasible = report.violated.empty();
  return report;
}

TwoByTwoFeasibility nn2x2_feasible(const SingularSpectrum& sigma,
                                   const DiagonalTarget& d) {
  const SortedPair p = sorted_two(sigma, d, "nn2x2_feasible");
  const bool case1 = geq(p.d1 * p.d2, p.s1 * p.s2) &&
                     geq(p.s1 + p.s2, p.d1 + p.d2) &&
                     geq(p.s1 - p.s2, p.d1 - p.d2);
  if (case1) return TwoByTwoFeasibility::FeasibleCase1;
  if (geq(p.s1 - p.s2, p.d1 + p.d2)) return TwoByTwoFeasibility::FeasibleCase2;
  return TwoByTwoFeasibility::Infeasible;
}

DenseMatrix TwoByTwoSolution::assemble() const {
  return DenseMatrix::from_rows({{d1, b}, {c, d2}});
}

TwoByTwoSolution nn2x2_construct(const SingularSpectrum& sigma,
                                 const DiagonalTarget& d) {
  const TwoByTwoFeasibility verdict = nn2x2_feasible(sigma, d);
  if (verdict == TwoByTwoFeasibility::Infeasible) {
    throw InfeasibleInput("nn2x2_construct: no nonnegative 2x2 matrix exists");
  }
  const SortedPair p = sorted_two(sigma, d, "nn2x2_construct");

  // b^2 + c^2 = s1^2 + s2^2 - d1^2 - d2^2 always; the product bc depends on
  // the determinant regime.
  const double squares = p.s1 * p.s1 + p.s2 * p.s2 - p.d1 * p.d1 - p.d2 * p.d2;
  const bool case1 = verdict == TwoByTwoFeasibility::FeasibleCase1;
  const double product =
      case1 ? p.d1 * p.d2 - p.s1 * p.s2 : p.s1 * p.s2 + p.d1 * p.d2;

  // (b+c)^2 and (b-c)^2; feasibility keeps both nonnegative up to roundoff.
  const double plus = std::sqrt(std::max(squares + 2.0 * product, 0.0));
  const double minus = std::sqrt(std::max(squares - 2.0 * product, 0.0));

  TwoByTwoSolution sol;
  sol.d1 = p.d1;
  sol.d2 = p.d2;
  sol.b = 0.5 * (plus + minus);
  sol.c = 0.5 * (plus - minus);
  sol.case_tag = case1 ? TwoByTwoCase::DetNonneg : TwoByTwoCase::DetNeg;
  return sol;
}

long manifold_dimension(std::size_t m, std::size_t n,
                        const std::vector<std::size_t>& multiplicities) {
  if (m < n || n == 0) {
    throw BadMultiplicities("manifold_dimension: need m >= n >= 1");
  }
  std::size_t total = 0;
  for (std::size_t ni : multiplicities) {
    if (ni == 0) throw BadMultiplicities("manifold_dimension: zero multiplicity");
    total += ni;
  }
  if (total != n) {
    throw BadMultiplicities("manifold_dimension: multiplicities sum to " +
                            std::to_string(total) + ", expected " +
                            std::to_string(n));
  }
  long dim = static_cast<long>(n) * (static_cast<long>(m) - 1);
  for (std::size_t ni : multiplicities) {
    dim -= static_cast<long>(ni * (ni - 1) / 2);
  }
  return dim;
}

}  // namespace nisvp
