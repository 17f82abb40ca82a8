#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nisvp/feasibility.hpp"
#include "nisvp/matrix.hpp"

namespace nisvp {

/// Prescribed entries: value k_t at position (i_t, j_t), 0-based. The fixed
/// diagonal of the basic problem is the special case i_t = j_t.
struct EntryConstraint {
  std::vector<std::pair<std::size_t, std::size_t>> index_pairs;
  std::vector<double> values;

  static EntryConstraint diagonal(const std::vector<double>& d);

  std::size_t size() const { return index_pairs.size(); }

  /// Checks pairwise-distinct in-bounds indices and nonnegative values.
  void validate(std::size_t rows, std::size_t cols) const;
};

/// One full problem instance: find an m-by-n matrix with the given singular
/// values, optionally nonnegative, with prescribed entries, optionally
/// symmetric.
struct ConstraintSetSpec {
  std::size_t rows = 0;
  std::size_t cols = 0;
  SingularSpectrum spectrum;
  std::optional<EntryConstraint> entry_constraint;
  bool nonnegative = true;
  bool symmetric = false;

  void validate() const;
};

/// Nearest matrix (Frobenius) with the prescribed singular values:
/// U * diag(sigma) * V^T from the SVD of a. Not unique when the set is
/// nonconvex; this returns the representative the SVD kernel yields.
DenseMatrix project_spectrum(const DenseMatrix& a,
                             const SingularSpectrum& sigma);

/// Entrywise clamp to the nonnegative orthant.
DenseMatrix project_nonnegative(const DenseMatrix& a);

/// Overwrites the prescribed entries, leaves the rest untouched.
DenseMatrix project_entries(const DenseMatrix& a, const EntryConstraint& c);

/// (a + a^T) / 2. Throws NotSquare otherwise.
DenseMatrix project_symmetric(const DenseMatrix& a);

/// How far a matrix is from each constraint set, for reporting.
struct MembershipResiduals {
  double spectrum_residual = 0.0;  // ||sorted sv(a) - sigma||_2 / ||sigma||_2
  double negativity = 0.0;         // ||min(a, 0)||_F
  double entry_residual = 0.0;     // max_t |a(i_t,j_t) - k_t|
  std::optional<double> asymmetry; // ||a - a^T||_F / 2, when symmetric asked
};

MembershipResiduals project_membership_residuals(const DenseMatrix& a,
                                                 const ConstraintSetSpec& spec);

}  // namespace nisvp
