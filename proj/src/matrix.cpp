#include "qdtough/matrix.hpp"

#include <algorithm>

#include "qdtough/error.hpp"

namespace qdtough {

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : order_(rows.size()), entries_() {
  entries_.reserve(order_ * order_);
  for (const auto& r : rows) {
    if (r.size() != order_) throw Error(ErrorKind::InvalidArgument, "matrix rows must be square");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

DenseMatrix DenseMatrix::identity(std::size_t order) {
  DenseMatrix m(order, true);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::ones(std::size_t order) {
  DenseMatrix m(order, true);
  std::fill(m.entries_.begin(), m.entries_.end(), 1.0);
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> values) {
  DenseMatrix m(values.size(), true);
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

double DenseMatrix::row_sum(std::size_t i) const {
  double sum = 0.0;
  for (double v : row(i)) sum += v;
  return sum;
}

double DenseMatrix::trace() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < order_; ++i) sum += (*this)(i, i);
  return sum;
}

bool DenseMatrix::nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](double v) { return v >= 0.0; });
}

void DenseMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  for (std::size_t i = 0; i < order_; ++i) {
    const double* r = entries_.data() + i * order_;
    double acc = 0.0;
    for (std::size_t j = 0; j < order_; ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
}

std::vector<double> DenseMatrix::operator*(std::span<const double> x) const {
  if (x.size() != order_) throw Error(ErrorKind::InvalidArgument, "vector length mismatch");
  std::vector<double> y(order_);
  multiply(x, y);
  return y;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& other) const {
  if (other.order_ != order_) throw Error(ErrorKind::InvalidArgument, "matrix order mismatch");
  DenseMatrix out(order_, symmetric_ && other.symmetric_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + other.entries_[k];
  return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& other) const { return *this + other * -1.0; }

DenseMatrix DenseMatrix::operator*(double scale) const {
  DenseMatrix out = *this;
  for (double& v : out.entries_) v *= scale;
  return out;
}

}  // namespace qdtough
