#include "oforge/matrix.hpp"

#include <cassert>

namespace oforge {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  assert(cols_ == o.rows_);
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Matrix Matrix::scaled(const Rat& s) const {
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

Matrix Matrix::col(int c) const {
  Matrix r(rows_, 1);
  for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, c);
  return r;
}

Matrix Matrix::hstack(const Matrix& l, const Matrix& r) {
  assert(l.rows_ == r.rows_);
  Matrix m(l.rows_, l.cols_ + r.cols_);
  for (int i = 0; i < l.rows_; ++i) {
    for (int j = 0; j < l.cols_; ++j) m.at(i, j) = l.at(i, j);
    for (int j = 0; j < r.cols_; ++j) m.at(i, l.cols_ + j) = r.at(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& t, const Matrix& b) {
  assert(t.cols_ == b.cols_);
  Matrix m(t.rows_ + b.rows_, t.cols_);
  for (int j = 0; j < t.cols_; ++j) {
    for (int i = 0; i < t.rows_; ++i) m.at(i, j) = t.at(i, j);
    for (int i = 0; i < b.rows_; ++i) m.at(t.rows_ + i, j) = b.at(i, j);
  }
  return m;
}

Matrix Matrix::diag_blocks(const std::vector<Matrix>& blocks) {
  int r = 0, c = 0;
  for (const auto& b : blocks) r += b.rows(), c += b.cols();
  Matrix m(r, c);
  int ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m.at(ro + i, co + j) = b.at(i, j);
    ro += b.rows(), co += b.cols();
  }
  return m;
}

Rref rref(const Matrix& min) {
  Rref out{min, {}};
  Matrix& m = out.m;
  int lead = 0;
  for (int r = 0; r < m.rows() && lead < m.cols(); ++r) {
    int i = r;
    while (i < m.rows() && m.at(i, lead) == 0) ++i;
    while (i == m.rows()) {
      ++lead;
      if (lead == m.cols()) return out;
      i = r;
      while (i < m.rows() && m.at(i, lead) == 0) ++i;
    }
    if (i != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(i, j), m.at(r, j));
    Rat inv = 1 / m.at(r, lead);
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int k = 0; k < m.rows(); ++k) {
      if (k == r || m.at(k, lead) == 0) continue;
      Rat f = m.at(k, lead);
      for (int j = 0; j < m.cols(); ++j) m.at(k, j) -= f * m.at(r, j);
    }
    out.pivot_cols.push_back(lead);
    ++lead;
  }
  return out;
}

int Matrix::rank() const { return int(rref(*this).pivot_cols.size()); }

Matrix Matrix::kernel_basis() const {
  Rref r = rref(*this);
  std::vector<int> free_cols;
  {
    size_t p = 0;
    for (int c = 0; c < cols_; ++c) {
      if (p < r.pivot_cols.size() && r.pivot_cols[p] == c)
        ++p;
      else
        free_cols.push_back(c);
    }
  }
  Matrix k(cols_, int(free_cols.size()));
  for (size_t f = 0; f < free_cols.size(); ++f) {
    k.at(free_cols[f], int(f)) = 1;
    for (size_t p = 0; p < r.pivot_cols.size(); ++p)
      k.at(r.pivot_cols[p], int(f)) = -r.m.at(int(p), free_cols[f]);
  }
  return k;
}

Matrix Matrix::column_space_basis() const {
  Rref rt = rref(transpose());
  Matrix b(rows_, int(rt.pivot_cols.size()));
  for (size_t i = 0; i < rt.pivot_cols.size(); ++i)
    for (int j = 0; j < rows_; ++j) b.at(j, int(i)) = rt.m.at(int(i), j);
  return b;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  assert(b.rows() == rows_);
  Rref r = rref(hstack(*this, b));
  for (int pc : r.pivot_cols)
    if (pc >= cols_) return std::nullopt;  // inconsistent
  Matrix x(cols_, b.cols());
  for (size_t p = 0; p < r.pivot_cols.size(); ++p)
    for (int j = 0; j < b.cols(); ++j) x.at(r.pivot_cols[p], j) = r.m.at(int(p), cols_ + j);
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  auto x = solve(identity(rows_));
  if (!x) return std::nullopt;
  if (!(*this * *x == identity(rows_)) || !(*x * *this == identity(rows_))) return std::nullopt;
  return x;
}

QuotientPresentation quotient_by_columns(int n, const Matrix& rels) {
  assert(rels.rows() == n || rels.cols() == 0);
  Rref rt = rref(rels.cols() == 0 ? Matrix(0, n) : rels.transpose());
  // pivot coordinates are eliminated; the others present the quotient
  std::vector<int> piv = rt.pivot_cols, rest;
  {
    size_t p = 0;
    for (int c = 0; c < n; ++c) {
      if (p < piv.size() && piv[p] == c)
        ++p;
      else
        rest.push_back(c);
    }
  }
  QuotientPresentation q;
  q.proj = Matrix(int(rest.size()), n);
  q.section = Matrix(n, int(rest.size()));
  for (size_t i = 0; i < rest.size(); ++i) {
    q.proj.at(int(i), rest[i]) = 1;
    q.section.at(rest[i], int(i)) = 1;
  }
  // a pivot coordinate p (row r of the echelon) satisfies
  // e_p = -sum over non-pivot coords of coeff * e_c modulo the relations
  for (size_t r = 0; r < piv.size(); ++r)
    for (size_t i = 0; i < rest.size(); ++i) {
      const Rat& c = rt.m.at(int(r), rest[i]);
      if (c != 0) q.proj.at(int(i), piv[r]) = -c;
    }
  return q;
}

}  // namespace oforge
