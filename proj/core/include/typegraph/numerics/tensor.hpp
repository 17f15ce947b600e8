#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace typegraph::numerics {

using Shape = std::vector<std::size_t>;

std::string to_string(const Shape& shape);
std::size_t element_count(const Shape& shape);

/// Dense row-major tensor of doubles.
///
/// Storage supports any rank (checkpoints keep the declared shape), but the
/// differentiable operations all work on rank-2 tensors: vectors are stored
/// as 1 x n rows and scalars as 1 x 1.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape, double fill = 0.0);
  Tensor(Shape shape, std::vector<double> data);

  static Tensor matrix(std::size_t rows, std::size_t cols, double fill = 0.0) {
    return Tensor({rows, cols}, fill);
  }
  static Tensor scalar(double value) { return Tensor({1, 1}, value); }
  /// Builds a rows x cols matrix from nested initializer data (row major).
  static Tensor from_rows(const std::vector<std::vector<double>>& rows);

  const Shape& shape() const noexcept { return shape_; }
  std::size_t rank() const noexcept { return shape_.size(); }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  std::size_t rows() const;
  std::size_t cols() const;

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }
  std::vector<double>& storage() noexcept { return data_; }

  double& operator[](std::size_t i) noexcept { return data_[i]; }
  double operator[](std::size_t i) const noexcept { return data_[i]; }
  double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * shape_[1] + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * shape_[1] + c]; }

  std::span<double> row(std::size_t r) { return std::span<double>(data_).subspan(r * cols(), cols()); }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(data_).subspan(r * cols(), cols());
  }

  void fill(double value);
  /// this += other (same shape).
  void accumulate(const Tensor& other);

  bool all_finite() const noexcept;
  double max_abs() const noexcept;

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  Shape shape_;
  std::vector<double> data_;
};

/// Throws ShapeError unless `a` and `b` have the same shape.
void require_same_shape(const Tensor& a, const Tensor& b, const char* op);

/// C = A * B
Tensor matmul(const Tensor& a, const Tensor& b);
/// C = A * B^T
Tensor matmul_nt(const Tensor& a, const Tensor& b);
/// C = A^T * B
Tensor matmul_tn(const Tensor& a, const Tensor& b);

}  // namespace typegraph::numerics
