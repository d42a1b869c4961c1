#include "cdgmf/matrix.hpp"

#include <algorithm>

#include "cdgmf/errors.hpp"

namespace cdgmf {

PolyMatrix::PolyMatrix(FieldSpec f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
  a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Poly(f));
}

PolyMatrix PolyMatrix::identity(FieldSpec f, int n) {
  PolyMatrix m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Poly::constant(f, 1);
  return m;
}

PolyMatrix PolyMatrix::scalar(const Poly& p, int n) {
  PolyMatrix m(p.field(), n, n);
  for (int i = 0; i < n; ++i) m(i, i) = p;
  return m;
}

PolyMatrix PolyMatrix::from_rows(FieldSpec f, int rows, int cols,
                                 const std::vector<std::vector<Poly>>& data) {
  if (static_cast<int>(data.size()) != rows) throw DimensionMismatch("row count mismatch");
  PolyMatrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(data[static_cast<std::size_t>(i)].size()) != cols)
      throw DimensionMismatch("ragged matrix rows");
    for (int j = 0; j < cols; ++j) {
      const Poly& p = data[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!p.is_zero() && p.field() != f) throw RingMismatch("matrix entry over another field");
      m(i, j) = p.is_zero() ? Poly(f) : p;
    }
  }
  return m;
}

PolyMatrix PolyMatrix::from_ints(FieldSpec f, const std::vector<std::vector<std::vector<long>>>& data) {
  int rows = static_cast<int>(data.size());
  int cols = rows ? static_cast<int>(data[0].size()) : 0;
  PolyMatrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(data[static_cast<std::size_t>(i)].size()) != cols)
      throw DimensionMismatch("ragged matrix rows");
    for (int j = 0; j < cols; ++j)
      m(i, j) = Poly::from_ints(f, data[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

PolyMatrix PolyMatrix::column(FieldSpec f, const std::vector<Poly>& entries) {
  PolyMatrix m(f, static_cast<int>(entries.size()), 1);
  for (int i = 0; i < m.rows_; ++i) m(i, 0) = entries[static_cast<std::size_t>(i)];
  return m;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || nr < 0 || nc < 0 || r0 + nr > rows_ || c0 + nc > cols_)
    throw DimensionMismatch("block out of range");
  PolyMatrix b(field_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void PolyMatrix::set_block(int r0, int c0, const PolyMatrix& b) {
  if (r0 < 0 || c0 < 0 || r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw DimensionMismatch("set_block out of range");
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

int PolyMatrix::max_degree() const {
  int d = -1;
  for (const auto& p : a_) d = std::max(d, p.degree());
  return d;
}

void PolyMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void PolyMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void PolyMatrix::add_row_multiple(int target, int source, const Poly& q) {
  if (q.is_zero()) return;
  for (int c = 0; c < cols_; ++c) {
    const Poly& s = (*this)(source, c);
    if (!s.is_zero()) (*this)(target, c) += q * s;
  }
}

void PolyMatrix::add_col_multiple(int target, int source, const Poly& q) {
  if (q.is_zero()) return;
  for (int r = 0; r < rows_; ++r) {
    const Poly& s = (*this)(r, source);
    if (!s.is_zero()) (*this)(r, target) += q * s;
  }
}

void PolyMatrix::scale_row(int i, const Scalar& c) {
  for (int j = 0; j < cols_; ++j) (*this)(i, j) = c * (*this)(i, j);
}

void PolyMatrix::scale_col(int j, const Scalar& c) {
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = c * (*this)(i, j);
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r = *this;
  for (auto& p : r.a_) p = -p;
  return r;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionMismatch("matrix product " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                            " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  PolyMatrix r(a.field_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Poly& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Poly& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

PolyMatrix operator*(const Poly& p, const PolyMatrix& a) {
  PolyMatrix r = a;
  for (auto& e : r.a_) e = p * e;
  return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::string PolyMatrix::to_string() const {
  std::string s = "[";
  for (int i = 0; i < rows_; ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
  PolyMatrix r(a.field(), a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
  PolyMatrix r(a.field(), a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

PolyMatrix block_diag(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Poly& x = a(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          const Poly& y = b(k, l);
          if (!y.is_zero()) r(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return r;
}

}  // namespace cdgmf
