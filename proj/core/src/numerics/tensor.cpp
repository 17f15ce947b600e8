#include "typegraph/numerics/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "typegraph/error.hpp"

namespace typegraph::numerics {

std::string to_string(const Shape& shape) {
  std::string out = "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(shape[i]);
  }
  return out + "]";
}

std::size_t element_count(const Shape& shape) {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

Tensor::Tensor(Shape shape, double fill)
    : shape_(std::move(shape)), data_(element_count(shape_), fill) {}

Tensor::Tensor(Shape shape, std::vector<double> data) : shape_(std::move(shape)), data_(std::move(data)) {
  if (data_.size() != element_count(shape_)) {
    throw ShapeError("tensor data length " + std::to_string(data_.size()) + " does not match shape " +
                     to_string(shape_));
  }
}

Tensor Tensor::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  Tensor t = matrix(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ShapeError("ragged rows in Tensor::from_rows");
    std::copy(rows[i].begin(), rows[i].end(), t.row(i).begin());
  }
  return t;
}

std::size_t Tensor::rows() const {
  if (rank() != 2) throw ShapeError("expected a matrix, got shape " + to_string(shape_));
  return shape_[0];
}

std::size_t Tensor::cols() const {
  if (rank() != 2) throw ShapeError("expected a matrix, got shape " + to_string(shape_));
  return shape_[1];
}

void Tensor::fill(double value) { std::fill(data_.begin(), data_.end(), value); }

void Tensor::accumulate(const Tensor& other) {
  require_same_shape(*this, other, "accumulate");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
}

bool Tensor::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

double Tensor::max_abs() const noexcept {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
  if (a.shape() != b.shape()) {
    throw ShapeError(std::string(op) + ": shape mismatch " + to_string(a.shape()) + " vs " +
                     to_string(b.shape()));
  }
}

Tensor matmul(const Tensor& a, const Tensor& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: shape mismatch " + to_string(a.shape()) + " vs " + to_string(b.shape()));
  }
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  Tensor c = Tensor::matrix(n, m);
  const double* A = a.data().data();
  const double* B = b.data().data();
  double* C = c.data().data();
  for (std::size_t i = 0; i < n; ++i) {
    double* ci = C + i * m;
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = A[i * k + p];
      if (aip == 0.0) continue;
      const double* bp = B + p * m;
      for (std::size_t j = 0; j < m; ++j) ci[j] += aip * bp[j];
    }
  }
  return c;
}

Tensor matmul_nt(const Tensor& a, const Tensor& b) {
  if (a.cols() != b.cols()) {
    throw ShapeError("matmul_nt: shape mismatch " + to_string(a.shape()) + " vs " + to_string(b.shape()));
  }
  const std::size_t n = a.rows(), k = a.cols(), m = b.rows();
  Tensor c = Tensor::matrix(n, m);
  const double* A = a.data().data();
  const double* B = b.data().data();
  double* C = c.data().data();
  for (std::size_t i = 0; i < n; ++i) {
    const double* ai = A + i * k;
    for (std::size_t j = 0; j < m; ++j) {
      const double* bj = B + j * k;
      double s = 0.0;
      for (std::size_t p = 0; p < k; ++p) s += ai[p] * bj[p];
      C[i * m + j] = s;
    }
  }
  return c;
}

Tensor matmul_tn(const Tensor& a, const Tensor& b) {
  if (a.rows() != b.rows()) {
    throw ShapeError("matmul_tn: shape mismatch " + to_string(a.shape()) + " vs " + to_string(b.shape()));
  }
  const std::size_t n = a.cols(), k = a.rows(), m = b.cols();
  Tensor c = Tensor::matrix(n, m);
  const double* A = a.data().data();
  const double* B = b.data().data();
  double* C = c.data().data();
  for (std::size_t p = 0; p < k; ++p) {
    const double* ap = A + p * n;
    const double* bp = B + p * m;
    for (std::size_t i = 0; i < n; ++i) {
      const double api = ap[i];
      if (api == 0.0) continue;
      double* ci = C + i * m;
      for (std::size_t j = 0; j < m; ++j) ci[j] += api * bp[j];
    }
  }
  return c;
}

}  // namespace typegraph::numerics
