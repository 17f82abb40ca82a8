#include "nisvp/projections.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "nisvp/svd.hpp"

namespace nisvp {

EntryConstraint EntryConstraint::diagonal(const std::vector<double>& d) {
  EntryConstraint c;
  c.index_pairs.reserve(d.size());
  c.values = d;
  for (std::size_t i = 0; i < d.size(); ++i) c.index_pairs.emplace_back(i, i);
  return c;
}

void EntryConstraint::validate(std::size_t rows, std::size_t cols) const {
  if (index_pairs.size() != values.size()) {
    throw LengthMismatch("EntryConstraint: " + std::to_string(index_pairs.size()) +
                         " positions vs " + std::to_string(values.size()) +
                         " values");
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t t = 0; t < index_pairs.size(); ++t) {
    const auto [i, j] = index_pairs[t];
    if (i >= rows || j >= cols) {
      throw IndexOutOfBounds("EntryConstraint: position (" + std::to_string(i) +
                             "," + std::to_string(j) + ") outside " +
                             std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (!seen.insert(index_pairs[t]).second) {
      throw IndexOutOfBounds("EntryConstraint: duplicate position (" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
    }
    if (values[t] < 0.0) {
      throw NegativeDiagonal("EntryConstraint: prescribed value " +
                             std::to_string(values[t]) +
                             " violates the nonnegativity requirement");
    }
  }
}

void ConstraintSetSpec::validate() const {
  if (rows == 0 || cols == 0 || rows < cols) {
    throw ShapeMismatch("ConstraintSetSpec: need rows >= cols >= 1");
  }
  if (spectrum.values.size() != cols) {
    throw LengthMismatch("ConstraintSetSpec: spectrum length " +
                         std::to_string(spectrum.values.size()) +
                         " does not match cols " + std::to_string(cols));
  }
  spectrum.validate();
  if (symmetric && rows != cols) {
    throw NotSquare("ConstraintSetSpec: symmetric problems must be square");
  }
  if (entry_constraint) entry_constraint->validate(rows, cols);
}

DenseMatrix project_spectrum(const DenseMatrix& a,
                             const SingularSpectrum& sigma) {
  sigma.validate();
  if (sigma.values.size() != a.cols()) {
    throw LengthMismatch("project_spectrum: spectrum length " +
                         std::to_string(sigma.values.size()) + " vs cols " +
                         std::to_string(a.cols()));
  }
  const ThinSvd f = compute_svd_thin(a);
  const std::size_t m = a.rows(), n = a.cols();
  DenseMatrix out(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double scaled = f.u(i, k) * sigma.values[k];
      for (std::size_t j = 0; j < n; ++j) out(i, j) += scaled * f.v(j, k);
    }
  }
  return out;
}

DenseMatrix project_nonnegative(const DenseMatrix& a) {
  DenseMatrix out = a;
  for (double& v : out.data()) v = std::max(v, 0.0);
  return out;
}

DenseMatrix project_entries(const DenseMatrix& a, const EntryConstraint& c) {
  c.validate(a.rows(), a.cols());
  DenseMatrix out = a;
  for (std::size_t t = 0; t < c.size(); ++t) {
    out(c.index_pairs[t].first, c.index_pairs[t].second) = c.values[t];
  }
  return out;
}

DenseMatrix project_symmetric(const DenseMatrix& a) {
  if (a.rows() != a.cols()) {
    throw NotSquare("project_symmetric: matrix is " + std::to_string(a.rows()) +
                    "x" + std::to_string(a.cols()));
  }
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = 0.5 * (a(i, j) + a(j, i));
    }
  }
  return out;
}

MembershipResiduals project_membership_residuals(const DenseMatrix& a,
                                                 const ConstraintSetSpec& spec) {
  spec.validate();
  if (a.rows() != spec.rows || a.cols() != spec.cols) {
    throw ShapeMismatch("project_membership_residuals: matrix does not match spec shape");
  }
  MembershipResiduals r;

  const std::vector<double> sv = singular_values_only(a);
  double diff2 = 0.0, norm2 = 0.0;
  for (std::size_t i = 0; i < sv.size(); ++i) {
    const double d = sv[i] - spec.spectrum.values[i];
    diff2 += d * d;
    norm2 += spec.spectrum.values[i] * spec.spectrum.values[i];
  }
  r.spectrum_residual = norm2 > 0.0 ? std::sqrt(diff2 / norm2) : std::sqrt(diff2);

  if (spec.nonnegative) {
    double neg2 = 0.0;
    for (double v : a.data()) {
      if (v < 0.0) neg2 += v * v;
    }
    r.negativity = std::sqrt(neg2);
  }

  if (spec.entry_constraint) {
    const EntryConstraint& c = *spec.entry_constraint;
    for (std::size_t t = 0; t < c.size(); ++t) {
      const double dev =
          std::abs(a(c.index_pairs[t].first, c.index_pairs[t].second) - c.values[t]);
      r.entry_residual = std::max(r.entry_residual, dev);
    }
  }

  if (spec.symmetric) {
    r.asymmetry = 0.5 * frobenius_norm(a - transpose(a));
  }
  return r;
}

}  // namespace nisvp
