#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qdtough {

/// Dense row-major real matrix. The symmetric flag is set by assembly
/// routines that write (i,j) and (j,i) together; it is never measured.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t order, bool symmetric = false)
      : order_(order), entries_(order * order, 0.0), symmetric_(symmetric) {}
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix zeros(std::size_t order) { return DenseMatrix(order, true); }
  static DenseMatrix identity(std::size_t order);
  /// The all-ones matrix J.
  static DenseMatrix ones(std::size_t order);
  static DenseMatrix diagonal(std::span<const double> values);

  std::size_t order() const { return order_; }
  bool symmetric() const { return symmetric_; }

  double operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
  std::span<const double> row(std::size_t i) const { return {entries_.data() + i * order_, order_}; }
  std::span<const double> data() const { return entries_; }

  double row_sum(std::size_t i) const;
  double trace() const;
  bool nonnegative() const;

  /// y = M x
  void multiply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> operator*(std::span<const double> x) const;

  DenseMatrix operator+(const DenseMatrix& other) const;
  DenseMatrix operator-(const DenseMatrix& other) const;
  DenseMatrix operator*(double scale) const;
  friend DenseMatrix operator*(double scale, const DenseMatrix& m) { return m * scale; }

  bool operator==(const DenseMatrix& other) const {
    return order_ == other.order_ && entries_ == other.entries_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<double> entries_;
  bool symmetric_ = false;
};

}  // namespace qdtough
