#pragma once

#include <vector>

#include "nisvp/matrix.hpp"

namespace nisvp {

/// Full factorization A = U * diag(s) * V^T with U m-by-m and V n-by-n
/// orthogonal, s descending and nonnegative.
struct SvdFactors {
  DenseMatrix u;
  std::vector<double> singular_values;
  DenseMatrix v;
};

/// Economy factorization: u is m-by-n with orthonormal columns. Enough to
/// rebuild A and cheaper to carry around than the full U.
struct ThinSvd {
  DenseMatrix u;
  std::vector<double> singular_values;
  DenseMatrix v;
};

/// One-sided Jacobi SVD (cyclic sweeps over column pairs). Requires m >= n.
/// Throws NoConvergence if the sweep budget (30 per column) runs out.
SvdFactors compute_svd(const DenseMatrix& a);

std::vector<double> singular_values_only(const DenseMatrix& a);

/// Economy kernel. When v_warm is given, the sweeps start from a * v_warm;
/// for slowly varying inputs (successive solver iterates) the columns are
/// then nearly orthogonal already and one or two sweeps suffice.
ThinSvd compute_svd_thin(const DenseMatrix& a,
                         const DenseMatrix* v_warm = nullptr);

}  // namespace nisvp
