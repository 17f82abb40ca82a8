#pragma once

#include <cstddef>
#include <vector>

#include "nisvp/matrix.hpp"

namespace nisvp {

/// Target singular values, descending and nonnegative.
struct SingularSpectrum {
  std::vector<double> values;

  /// Throws BadRange unless sorted descending with all values >= 0.
  void validate() const;

  /// Builds a valid spectrum from values in any order.
  static SingularSpectrum sorted(std::vector<double> values);
};

/// Target diagonal entries, in position order. Signed values are allowed
/// here because the Sing-Thompson test is about real matrices; nonnegative
/// construction paths check the sign themselves.
struct DiagonalTarget {
  std::vector<double> values;
};

/// Outcome of the Sing-Thompson majorization test. `violated` lists the
/// failed inequalities: k in 1..n is the k-th prefix inequality
/// sum |d_i| <= sum sigma_i, and n+1 is the flipped-last-term inequality
/// sum_{i<n} |d_i| - |d_n| <= sum_{i<n} sigma_i - sigma_n.
struct SingThompsonReport {
  bool feasible = false;
  std::vector<std::size_t> violated;
};

/// Existence test for a real n-by-n matrix with singular values sigma and
/// diagonal d (in some order). d is re-sorted by descending magnitude
/// internally.
SingThompsonReport sing_thompson_feasible(const SingularSpectrum& sigma,
                                          const DiagonalTarget& d);

enum class TwoByTwoFeasibility { FeasibleCase1, FeasibleCase2, Infeasible };

/// Determinant-sign regime of a 2x2 solution: DetNonneg means bc <= d1*d2,
/// DetNeg means bc > d1*d2.
enum class TwoByTwoCase { DetNonneg, DetNeg };

/// Existence test for a nonnegative 2x2 matrix [[d1,b],[c,d2]] with the
/// given singular values. Inputs are sorted descending internally.
/// Case 1 requires sigma1*sigma2 <= d1*d2, sigma1+sigma2 >= d1+d2 and
/// sigma1-sigma2 >= d1-d2; Case 2 requires sigma1-sigma2 >= d1+d2. When
/// both hold Case 1 wins. Throws NegativeDiagonal for d < 0.
TwoByTwoFeasibility nn2x2_feasible(const SingularSpectrum& sigma,
                                   const DiagonalTarget& d);

struct TwoByTwoSolution {
  double d1 = 0.0, d2 = 0.0;
  double b = 0.0, c = 0.0;
  TwoByTwoCase case_tag = TwoByTwoCase::DetNonneg;

  /// [[d1, b], [c, d2]]
  DenseMatrix assemble() const;
};

/// Closed-form constructor for the feasible cases, convention b >= c (the
/// transpose is equally valid). Throws InfeasibleInput otherwise.
TwoByTwoSolution nn2x2_construct(const SingularSpectrum& sigma,
                                 const DiagonalTarget& d);

/// Dimension of the manifold of m-by-n matrices whose singular values take
/// r distinct positive values with the given multiplicities:
/// n*(m-1) - sum_i n_i*(n_i-1)/2. Requires sum n_i = n and m >= n.
long manifold_dimension(std::size_t m, std::size_t n,
                        const std::vector<std::size_t>& multiplicities);

}  // namespace nisvp
