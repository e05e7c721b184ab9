#include "matgerm/matrix.hpp"

namespace matgerm {

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (!same_shape(o)) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (!same_shape(o)) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_ || varcount_ != o.varcount_)
    throw std::invalid_argument("matrix product shape mismatch");
  PolyMatrix r(rows_, o.cols_, varcount_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      Polynomial s(varcount_);
      for (int k = 0; k < cols_; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& f) const {
  PolyMatrix r(*this);
  for (auto& p : r.e_) p = p * f;
  return r;
}

PolyMatrix PolyMatrix::scaled(const Rat& c) const {
  PolyMatrix r(*this);
  for (auto& p : r.e_) p = p * c;
  return r;
}

PolyMatrix PolyMatrix::truncated(long max_total_degree) const {
  PolyMatrix r(*this);
  for (auto& p : r.e_) p = p.truncate(max_total_degree);
  return r;
}

PolyMatrix PolyMatrix::without(int row, int col) const {
  int nr = rows_ - (row >= 0 ? 1 : 0);
  int nc = cols_ - (col >= 0 ? 1 : 0);
  PolyMatrix r(nr, nc, varcount_);
  int ri = 0;
  for (int i = 0; i < rows_; ++i) {
    if (i == row) continue;
    int rj = 0;
    for (int j = 0; j < cols_; ++j) {
      if (j == col) continue;
      r.at(ri, rj) = at(i, j);
      ++rj;
    }
    ++ri;
  }
  return r;
}

PolyMatrix PolyMatrix::identity(int n, int varcount) {
  PolyMatrix r(n, n, varcount);
  for (int i = 0; i < n; ++i) r.at(i, i) = Polynomial::constant(varcount, 1);
  return r;
}

Polynomial det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  int n = m.rows();
  if (n == 0) return Polynomial::constant(m.varcount(), 1);
  if (n == 1) return m.at(0, 0);
  Polynomial d(m.varcount());
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    Polynomial minor = det(m.without(0, j));
    Polynomial term = m.at(0, j) * minor;
    d += (j % 2 == 0) ? term : -term;
  }
  return d;
}

}  // namespace matgerm
