#pragma once

#include <string>
#include <vector>

#include "cdgmf/poly.hpp"

namespace cdgmf {

// Dense matrix of polynomials, row-major. Shapes with a zero dimension are legal
// and keep their other dimension.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(FieldSpec f, int rows, int cols);
  static PolyMatrix zero(FieldSpec f, int rows, int cols) { return PolyMatrix(f, rows, cols); }
  static PolyMatrix identity(FieldSpec f, int n);
  static PolyMatrix scalar(const Poly& p, int n);  // p * I_n
  static PolyMatrix from_rows(FieldSpec f, int rows, int cols, const std::vector<std::vector<Poly>>& data);
  // Rows of integer coefficient lists, e.g. {{{0,1}}} is the 1x1 matrix [x].
  static PolyMatrix from_ints(FieldSpec f, const std::vector<std::vector<std::vector<long>>>& data);
  static PolyMatrix column(FieldSpec f, const std::vector<Poly>& entries);

  FieldSpec field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Poly& operator()(int i, int j) { return a_[index(i, j)]; }
  const Poly& operator()(int i, int j) const { return a_[index(i, j)]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  PolyMatrix transpose() const;
  PolyMatrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const PolyMatrix& b);
  PolyMatrix col(int j) const { return block(0, j, rows_, 1); }
  PolyMatrix cols_range(int c0, int nc) const { return block(0, c0, rows_, nc); }
  PolyMatrix rows_range(int r0, int nr) const { return block(r0, 0, nr, cols_); }
  int max_degree() const;

  // Elementary operations used by the normal-form routines.
  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void add_row_multiple(int target, int source, const Poly& q);  // row_t += q * row_s
  void add_col_multiple(int target, int source, const Poly& q);  // col_t += q * col_s
  void scale_row(int i, const Scalar& c);
  void scale_col(int j, const Scalar& c);

  PolyMatrix operator-() const;
  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Poly& p, const PolyMatrix& a);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }
  FieldSpec field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Poly> a_;
};

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b);
// Kronecker product; (A (x) B)[i*rb + k][j*cb + l] = A[i][j] * B[k][l].
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace cdgmf
