#include "pwkit/weyl/rational_matrix.hpp"

#include <utility>

#include "pwkit/errors.hpp"

namespace pwkit::weyl {

std::vector<int> RationalMatrix::rref() {
  std::vector<int> pivots;
  int row = 0;
  mpq_class factor;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pick = -1;
    for (int r = row; r < rows_; ++r)
      if (sgn((*this)(r, col)) != 0) {
        pick = r;
        break;
      }
    if (pick < 0) continue;
    if (pick != row)
      for (int c = 0; c < cols_; ++c) std::swap((*this)(pick, c), (*this)(row, c));
    const mpq_class inv = 1 / (*this)(row, col);
    for (int c = col; c < cols_; ++c)
      if (sgn((*this)(row, c)) != 0) (*this)(row, c) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || sgn((*this)(r, col)) == 0) continue;
      factor = (*this)(r, col);
      for (int c = col; c < cols_; ++c)
        if (sgn((*this)(row, c)) != 0) (*this)(r, c) -= factor * (*this)(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return static_cast<int>(copy.rref().size());
}

std::optional<std::vector<mpq_class>> RationalMatrix::solve(
    const std::vector<mpq_class>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw InvalidArgument("right-hand side size mismatch");
  RationalMatrix aug(rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    aug(r, cols_) = b[r];
  }
  const std::vector<int> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<mpq_class> x(cols_);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(static_cast<int>(i), cols_);
  return x;
}

}  // namespace pwkit::weyl
