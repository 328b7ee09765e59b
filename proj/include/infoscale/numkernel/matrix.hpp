#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace infoscale {

/// Dense row-major matrix of doubles.
///
/// Entries are finite except in logits matrices, where -inf marks a masked
/// cell. Holds queries, keys, values, score and probability matrices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  /// Throws ConfigError when data.size() != rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }

  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

/// A * B. Throws ConfigError on inner-dimension mismatch.
Matrix matmul(const Matrix& a, const Matrix& b);
/// A * B^T (row i of A against row j of B).
Matrix matmul_transposed(const Matrix& a, const Matrix& b);

/// Rows scaled to unit Euclidean norm. Throws ConfigError on a zero row.
Matrix normalize_rows(const Matrix& m);

}  // namespace infoscale
