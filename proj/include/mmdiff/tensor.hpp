#pragma once

// Dense row-major tensor on an Eigen array, templated on scalar so the same
// model code runs at float for training/sampling and at double for gradient
// checks.

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mmdiff {

using Index = std::int64_t;
using Shape = std::vector<Index>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << ']';
  return os.str();
}

inline Index shape_numel(const Shape& s) {
  Index n = 1;
  for (Index d : s) {
    if (d <= 0) fail("invalid shape " + shape_str(s) + ": dimensions must be positive");
    n *= d;
  }
  return n;
}

template <typename Scalar>
class Tensor {
 public:
  using Array = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
  using MatrixMap =
      Eigen::Map<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
  using ConstMatrixMap =
      Eigen::Map<const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

  Tensor() = default;
  explicit Tensor(Shape shape)
      : shape_(std::move(shape)), data_(Array::Zero(shape_numel(shape_))) {}
  Tensor(Shape shape, std::initializer_list<Scalar> values) : shape_(std::move(shape)) {
    const Index n = shape_numel(shape_);
    if (static_cast<Index>(values.size()) != n)
      fail("tensor init: " + std::to_string(values.size()) + " values for shape " +
           shape_str(shape_));
    data_.resize(n);
    Index i = 0;
    for (Scalar v : values) data_[i++] = v;
  }

  static Tensor zeros(Shape shape) { return Tensor(std::move(shape)); }
  static Tensor full(Shape shape, Scalar v) {
    Tensor t(std::move(shape));
    t.data_.setConstant(v);
    return t;
  }
  static Tensor scalar(Scalar v) { return full({1}, v); }
  static Tensor from_vector(Shape shape, const std::vector<Scalar>& values) {
    Tensor t;
    t.shape_ = std::move(shape);
    const Index n = shape_numel(t.shape_);
    if (static_cast<Index>(values.size()) != n)
      fail("tensor init: " + std::to_string(values.size()) + " values for shape " +
           shape_str(t.shape_));
    t.data_ = Eigen::Map<const Array>(values.data(), n);
    return t;
  }

  const Shape& shape() const { return shape_; }
  Index rank() const { return static_cast<Index>(shape_.size()); }
  Index dim(Index i) const { return shape_[static_cast<std::size_t>(i)]; }
  Index numel() const { return data_.size(); }
  bool empty() const { return data_.size() == 0; }

  Array& array() { return data_; }
  const Array& array() const { return data_; }
  Scalar* data() { return data_.data(); }
  const Scalar* data() const { return data_.data(); }

  Scalar& operator[](Index i) { return data_[i]; }
  Scalar operator[](Index i) const { return data_[i]; }

  Scalar& operator()(Index i, Index j) { return data_[i * dim(1) + j]; }
  Scalar operator()(Index i, Index j) const { return data_[i * dim(1) + j]; }
  Scalar& operator()(Index i, Index j, Index k) {
    return data_[(i * dim(1) + j) * dim(2) + k];
  }
  Scalar operator()(Index i, Index j, Index k) const {
    return data_[(i * dim(1) + j) * dim(2) + k];
  }

  // 2-D view for matrix algebra; the tensor is reinterpreted row-major.
  MatrixMap matrix(Index rows, Index cols) {
    if (rows * cols != numel())
      fail("matrix view " + std::to_string(rows) + "x" + std::to_string(cols) +
           " does not cover tensor " + shape_str(shape_));
    return MatrixMap(data_.data(), rows, cols);
  }
  ConstMatrixMap matrix(Index rows, Index cols) const {
    if (rows * cols != numel())
      fail("matrix view " + std::to_string(rows) + "x" + std::to_string(cols) +
           " does not cover tensor " + shape_str(shape_));
    return ConstMatrixMap(data_.data(), rows, cols);
  }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

  Tensor reshaped(Shape new_shape) const {
    if (shape_numel(new_shape) != numel())
      fail("reshape " + shape_str(shape_) + " -> " + shape_str(new_shape) +
           ": element counts differ");
    Tensor t = *this;
    t.shape_ = std::move(new_shape);
    return t;
  }

  template <typename T>
  Tensor<T> cast() const {
    Tensor<T> t;
    t = Tensor<T>(shape_);
    for (Index i = 0; i < numel(); ++i) t[i] = static_cast<T>(data_[i]);
    return t;
  }

  bool all_finite() const {
    for (Index i = 0; i < numel(); ++i)
      if (!std::isfinite(static_cast<double>(data_[i]))) return false;
    return true;
  }
  void require_finite(const std::string& what) const {
    if (!all_finite()) fail(what + ": tensor " + shape_str(shape_) + " contains NaN/Inf");
  }

  bool operator==(const Tensor& other) const {
    if (shape_ != other.shape_) return false;
    for (Index i = 0; i < numel(); ++i)
      if (data_[i] != other.data_[i]) return false;
    return true;
  }

 private:
  Shape shape_;
  Array data_;
};

using TensorF = Tensor<float>;
using TensorD = Tensor<double>;

}  // namespace mmdiff
