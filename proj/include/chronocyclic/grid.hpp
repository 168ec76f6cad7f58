#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace chronocyclic {

using cplx = std::complex<double>;

// Uniformly spaced, strictly increasing sample positions.
struct UniformAxis {
  double start = 0.0;
  double step = 1.0;
  std::size_t size = 0;

  double operator[](std::size_t i) const { return start + step * static_cast<double>(i); }
  double front() const { return start; }
  double back() const { return (*this)[size - 1]; }

  // size points centered on `center`, spanning [center - half_span, center + half_span].
  static UniformAxis centered(double center, double half_span, std::size_t size);
  std::vector<double> values() const;
};

// Dense row-major matrix. Rows index the first coordinate.
template <class T>
class Array2D {
 public:
  Array2D() = default;
  Array2D(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  std::span<T> flat() { return data_; }
  std::span<const T> flat() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace chronocyclic
