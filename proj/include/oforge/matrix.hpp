#pragma once

#include <optional>
#include <vector>

#include "oforge/rat.hpp"

namespace oforge {

// Dense rational matrix. Vectors are columns; a map V -> W with dim V = c,
// dim W = r is an r x c matrix acting by M * x.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool operator==(const Matrix& o) const = default;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rat& s) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix col(int c) const;
  // glue side by side / on top of each other
  static Matrix hstack(const Matrix& l, const Matrix& r);
  static Matrix vstack(const Matrix& t, const Matrix& b);
  // block-diagonal
  static Matrix diag_blocks(const std::vector<Matrix>& blocks);

  int rank() const;
  // columns spanning the kernel
  Matrix kernel_basis() const;
  // columns spanning the column space, in reduced column echelon form
  Matrix column_space_basis() const;
  // unique/any solution X of (*this) * X = B; nullopt when inconsistent
  std::optional<Matrix> solve(const Matrix& b) const;
  bool is_injective() const { return rank() == cols_; }
  bool is_surjective() const { return rank() == rows_; }
  std::optional<Matrix> inverse() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Row echelon data of a matrix: reduced row echelon form plus pivot columns.
struct Rref {
  Matrix m;
  std::vector<int> pivot_cols;
};
Rref rref(const Matrix& m);

// Presentation of the quotient of Q^n by the column space of `rels`:
// proj (q x n) and section (n x q) with proj*section = id_q, and
// proj*v = proj*w whenever v-w lies in the column space.
struct QuotientPresentation {
  Matrix proj;
  Matrix section;
};
QuotientPresentation quotient_by_columns(int n, const Matrix& rels);

}  // namespace oforge
