#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecgssl {

// Thrown for malformed inputs: missing files, bad manifests, shape
// mismatches, label problems. Maps to CLI exit code 2.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a computation loses numeric validity (non-finite loss or
// gradient, degenerate metric). Maps to CLI exit code 3.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Dense row-major matrix. Kept deliberately minimal; all arithmetic lives
// in kernels.hpp or on the autodiff tape.
template <typename T>
struct RowMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<T> v;

  RowMatrix() = default;
  RowMatrix(int r, int c) : rows(r), cols(c), v(static_cast<size_t>(r) * c, T{}) {}

  T& at(int r, int c) { return v[static_cast<size_t>(r) * cols + c]; }
  const T& at(int r, int c) const { return v[static_cast<size_t>(r) * cols + c]; }
  T* row(int r) { return v.data() + static_cast<size_t>(r) * cols; }
  const T* row(int r) const { return v.data() + static_cast<size_t>(r) * cols; }
  size_t size() const { return v.size(); }
};

using MatrixF = RowMatrix<float>;
using MatrixD = RowMatrix<double>;

}  // namespace ecgssl
