#include "nisvp/matrix.hpp"

#include <cmath>
#include <string>

namespace nisvp {

RngSeed Rng::derive(RngSeed base, std::uint64_t a, std::uint64_t b) {
  Rng g{RngSeed{base.value ^ (0x9e3779b97f4a7c15ULL * (a + 1))}};
  Rng h{RngSeed{g.next_u64() ^ (0xbf58476d1ce4e5b9ULL * (b + 1))}};
  return RngSeed{h.next_u64()};
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  if (rows == 0 || cols == 0) {
    throw ShapeMismatch("DenseMatrix: dimensions must be positive");
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix eye(n, n);
  for (std::size_t i = 0; i < n; ++i) eye(i, i) = 1.0;
  return eye;
}

DenseMatrix DenseMatrix::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m > 0 ? rows.begin()->size() : 0;
  DenseMatrix a(m, n);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw ShapeMismatch("from_rows: ragged row lengths");
    }
    std::size_t j = 0;
    for (double v : row) a(i, j++) = v;
    ++i;
  }
  return a;
}

bool DenseMatrix::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

namespace {

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b,
                        const char* who) {
  if (!a.same_shape(b)) {
    throw ShapeMismatch(std::string(who) + ": shapes " +
                        std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " vs " +
                        std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
  }
}

}  // namespace

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "operator+");
  DenseMatrix out = a;
  for (std::size_t k = 0; k < out.data().size(); ++k) out.data()[k] += b.data()[k];
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "operator-");
  DenseMatrix out = a;
  for (std::size_t k = 0; k < out.data().size(); ++k) out.data()[k] -= b.data()[k];
  return out;
}

DenseMatrix operator*(double s, const DenseMatrix& a) {
  DenseMatrix out = a;
  for (double& v : out.data()) v *= s;
  return out;
}

double frobenius_norm(const DenseMatrix& a) {
  double sum = 0.0;
  for (double v : a.data()) sum += v * v;
  return std::sqrt(sum);
}

double relative_change(const DenseMatrix& a_old, const DenseMatrix& a_new) {
  require_same_shape(a_old, a_new, "relative_change");
  const double denom = frobenius_norm(a_old);
  if (denom == 0.0) {
    throw ZeroDenominator("relative_change: ||a_old|| = 0");
  }
  return frobenius_norm(a_old - a_new) / denom;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeMismatch("matmul: inner dimensions " + std::to_string(a.cols()) +
                        " vs " + std::to_string(b.rows()));
  }
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

double trace(const DenseMatrix& a) {
  if (a.rows() != a.cols()) {
    throw ShapeMismatch("trace: matrix must be square");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

DenseMatrix random_nonnegative(std::size_t rows, std::size_t cols, double lo,
                               double hi, RngSeed seed) {
  if (lo < 0.0 || lo >= hi) {
    throw BadRange("random_nonnegative: need 0 <= lo < hi");
  }
  DenseMatrix out(rows, cols);
  Rng rng(seed);
  for (double& v : out.data()) v = rng.uniform(lo, hi);
  return out;
}

}  // namespace nisvp
