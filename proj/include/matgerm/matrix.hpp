#pragma once

#include <vector>

#include "matgerm/polynomial.hpp"

namespace matgerm {

/// Dense rows x cols grid of polynomials sharing one variable count.
class PolyMatrix {
public:
  PolyMatrix() : rows_(0), cols_(0), varcount_(0) {}
  PolyMatrix(int rows, int cols, int varcount)
      : rows_(rows), cols_(cols), varcount_(varcount),
        e_(std::size_t(rows) * cols, Polynomial(varcount)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int varcount() const { return varcount_; }

  Polynomial& at(int i, int j) {
    check_index(i, j);
    return e_[std::size_t(i) * cols_ + j];
  }
  const Polynomial& at(int i, int j) const {
    check_index(i, j);
    return e_[std::size_t(i) * cols_ + j];
  }

  bool is_zero() const {
    for (const auto& p : e_)
      if (!p.is_zero()) return false;
    return true;
  }

  bool same_shape(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && varcount_ == o.varcount_;
  }

  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator*(const PolyMatrix& o) const;  // matrix product
  PolyMatrix scaled(const Polynomial& f) const;
  PolyMatrix scaled(const Rat& c) const;
  PolyMatrix truncated(long max_total_degree) const;
  bool operator==(const PolyMatrix& o) const { return same_shape(o) && e_ == o.e_; }

  /// Submatrix with the given row and column removed (either may be -1 to
  /// keep all rows or columns).
  PolyMatrix without(int row, int col) const;

  static PolyMatrix identity(int n, int varcount);

private:
  void check_index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw std::out_of_range("matrix index out of range");
  }

  int rows_, cols_, varcount_;
  std::vector<Polynomial> e_;
};

/// Determinant by Laplace expansion along the first row; det of the 0x0
/// matrix is 1.
Polynomial det(const PolyMatrix& m);

}  // namespace matgerm
