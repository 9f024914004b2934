#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace pwkit::weyl {

/// Dense matrix over Q, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const mpq_class& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<int> rref();
  int rank() const;
  /// Some x with A x = b, or nothing if b is outside the column space.
  std::optional<std::vector<mpq_class>> solve(const std::vector<mpq_class>& b) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpq_class> data_;
};

}  // namespace pwkit::weyl
