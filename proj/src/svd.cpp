#include "nisvp/svd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace nisvp {

namespace {

// Column-major workspace so that the Jacobi rotations touch contiguous
// memory. Row-major DenseMatrix is transposed in and out at the boundary.
struct ColMat {
  std::size_t rows = 0, cols = 0;
  std::vector<double> a;

  ColMat(std::size_t m, std::size_t n) : rows(m), cols(n), a(m * n, 0.0) {}

  double* col(std::size_t j) { return a.data() + j * rows; }
  const double* col(std::size_t j) const { return a.data() + j * rows; }
};

ColMat to_col_major(const DenseMatrix& a) {
  ColMat w(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double* c = w.col(j);
    for (std::size_t i = 0; i < a.rows(); ++i) c[i] = a(i, j);
  }
  return w;
}

// w <- a * v, both inputs row-major, result column-major.
ColMat product_col_major(const DenseMatrix& a, const DenseMatrix& v) {
  ColMat w(a.rows(), v.cols());
  for (std::size_t j = 0; j < v.cols(); ++j) {
    double* c = w.col(j);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      double sum = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) sum += a(i, k) * v(k, j);
      c[i] = sum;
    }
  }
  return w;
}

double dot(const double* x, const double* y, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

void rotate_pair(double* x, double* y, std::size_t n, double cs, double sn) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = cs * xi - sn * yi;
    y[i] = sn * xi + cs * yi;
  }
}

// Relative off-diagonal threshold: a pair (p,q) counts as orthogonal when
// |w_p . w_q| <= tol * ||w_p|| * ||w_q||.
constexpr double kPairTol = 1e-15;

// Cyclic one-sided Jacobi on the columns of w, accumulating the right
// rotations into v. Returns false if the sweep budget is exhausted.
bool jacobi_sweeps(ColMat& w, ColMat& v, std::size_t max_sweeps) {
  const std::size_t m = w.rows;
  const std::size_t n = w.cols;
  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double* wp = w.col(p);
        double* wq = w.col(q);
        const double app = dot(wp, wp, m);
        const double aqq = dot(wq, wq, m);
        const double apq = dot(wp, wq, m);
        if (std::abs(apq) <= kPairTol * std::sqrt(app * aqq)) continue;
        rotated = true;
        // Angle that annihilates the (p,q) entry of the column Gram matrix.
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        rotate_pair(wp, wq, m, cs, sn);
        rotate_pair(v.col(p), v.col(q), n, cs, sn);
      }
    }
    if (!rotated) return true;
  }
  return false;
}

// Fill the listed columns of u with vectors orthonormal to every column not
// listed (and to each other), chosen deterministically from the canonical
// basis. Twice-through modified Gram-Schmidt keeps the defect at machine
// level.
void complete_basis(ColMat& u, const std::vector<std::size_t>& holes) {
  const std::size_t m = u.rows;
  std::vector<bool> is_hole(u.cols, false);
  for (std::size_t h : holes) is_hole[h] = true;

  std::vector<std::size_t> done;
  done.reserve(u.cols);
  for (std::size_t j = 0; j < u.cols; ++j) {
    if (!is_hole[j]) done.push_back(j);
  }

  std::vector<double> r(m), best(m);
  for (std::size_t h : holes) {
    // Take the canonical vector whose residual against the finished columns
    // is largest; the residual norms square-sum to m - |done|, so the best
    // one is always usable.
    double best_norm = -1.0;
    for (std::size_t cand = 0; cand < m; ++cand) {
      std::fill(r.begin(), r.end(), 0.0);
      r[cand] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j : done) {
          const double proj = dot(r.data(), u.col(j), m);
          const double* cj = u.col(j);
          for (std::size_t i = 0; i < m; ++i) r[i] -= proj * cj[i];
        }
      }
      const double norm = std::sqrt(dot(r.data(), r.data(), m));
      if (norm > best_norm) {
        best_norm = norm;
        best = r;
      }
    }
    double* ch = u.col(h);
    for (std::size_t i = 0; i < m; ++i) ch[i] = best[i] / best_norm;
    done.push_back(h);
  }
}

DenseMatrix to_row_major(const ColMat& w) {
  DenseMatrix out(w.rows, w.cols);
  for (std::size_t j = 0; j < w.cols; ++j) {
    const double* c = w.col(j);
    for (std::size_t i = 0; i < w.rows; ++i) out(i, j) = c[i];
  }
  return out;
}

}  // namespace

ThinSvd compute_svd_thin(const DenseMatrix& a, const DenseMatrix* v_warm) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (a.empty()) throw ShapeMismatch("compute_svd: empty matrix");
  if (m < n) {
    throw ShapeMismatch("compute_svd: requires rows >= cols, got " +
                        std::to_string(m) + "x" + std::to_string(n));
  }
  if (!a.all_finite()) {
    throw std::invalid_argument("compute_svd: non-finite entries");
  }

  ColMat w = v_warm ? product_col_major(a, *v_warm) : to_col_major(a);
  ColMat v(n, n);
  if (v_warm) {
    if (v_warm->rows() != n || v_warm->cols() != n) {
      throw ShapeMismatch("compute_svd: warm-start V must be n-by-n");
    }
    v = to_col_major(*v_warm);
  } else {
    for (std::size_t j = 0; j < n; ++j) v.col(j)[j] = 1.0;
  }

  if (!jacobi_sweeps(w, v, 30 * n)) {
    throw NoConvergence("compute_svd: sweep budget exhausted at " +
                        std::to_string(m) + "x" + std::to_string(n));
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    sigma[j] = std::sqrt(dot(w.col(j), w.col(j), m));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

  const double sigma_max = n > 0 ? sigma[order[0]] : 0.0;
  const double drop_tol =
      sigma_max * static_cast<double>(m) * std::numeric_limits<double>::epsilon();

  ColMat u(m, n);
  ColMat v_sorted(n, n);
  std::vector<double> s_sorted(n);
  std::vector<std::size_t> holes;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    s_sorted[j] = sigma[src];
    std::copy(v.col(src), v.col(src) + n, v_sorted.col(j));
    if (sigma[src] > drop_tol && sigma[src] > 0.0) {
      const double inv = 1.0 / sigma[src];
      const double* wc = w.col(src);
      double* uc = u.col(j);
      for (std::size_t i = 0; i < m; ++i) uc[i] = inv * wc[i];
    } else {
      holes.push_back(j);
    }
  }
  if (!holes.empty()) complete_basis(u, holes);

  return ThinSvd{to_row_major(u), std::move(s_sorted), to_row_major(v_sorted)};
}

SvdFactors compute_svd(const DenseMatrix& a) {
  ThinSvd thin = compute_svd_thin(a);
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m == n) {
    return SvdFactors{std::move(thin.u), std::move(thin.singular_values),
                      std::move(thin.v)};
  }
  // Extend the n orthonormal columns to a full m-by-m basis.
  ColMat u_full(m, m);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) u_full.col(j)[i] = thin.u(i, j);
  }
  std::vector<std::size_t> holes;
  for (std::size_t j = n; j < m; ++j) holes.push_back(j);
  complete_basis(u_full, holes);
  return SvdFactors{to_row_major(u_full), std::move(thin.singular_values),
                    std::move(thin.v)};
}

std::vector<double> singular_values_only(const DenseMatrix& a) {
  return compute_svd_thin(a).singular_values;
}

}  // namespace nisvp
