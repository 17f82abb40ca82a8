#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "nisvp/errors.hpp"

namespace nisvp {

/// Seed for the library's own generator. Equal seeds reproduce equal streams
/// bit for bit on every platform.
struct RngSeed {
  std::uint64_t value = 0;
};

/// SplitMix64 (Steele/Lea/Burton): a 64-bit counter advanced by the golden
/// ratio constant, finalized by two xorshift-multiply rounds. Small state,
/// trivially splittable, which is what the experiment harness needs to hand
/// each trial its own stream.
class Rng {
 public:
  explicit Rng(RngSeed seed) : state_(seed.value) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  /// Deterministic sub-stream seed for (group, index)-style derivation.
  static RngSeed derive(RngSeed base, std::uint64_t a, std::uint64_t b);

 private:
  std::uint64_t state_;
};

/// Dense m-by-n real matrix, row-major, double precision.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(
      std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_shape(const DenseMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }
  bool all_finite() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(double s, const DenseMatrix& a);

double frobenius_norm(const DenseMatrix& a);

/// ||a_old - a_new||_F / ||a_old||_F, the iteration's stopping quantity.
/// Throws ZeroDenominator when ||a_old||_F = 0.
double relative_change(const DenseMatrix& a_old, const DenseMatrix& a_new);

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& a);
double trace(const DenseMatrix& a);

/// m-by-n matrix with i.i.d. entries uniform on [lo, hi], 0 <= lo < hi.
DenseMatrix random_nonnegative(std::size_t rows, std::size_t cols, double lo,
                               double hi, RngSeed seed);

}  // namespace nisvp
