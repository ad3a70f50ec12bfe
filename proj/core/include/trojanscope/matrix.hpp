#pragma once

#include <cstdint>
#include <vector>

namespace trojanscope {

/// Dense row-major matrix of doubles. Small and predictable on purpose:
/// training must be bit-reproducible across runs, so accumulation order is
/// fixed everywhere.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols, 0.0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double* data() { return d_.data(); }
  const double* data() const { return d_.data(); }
  double& at(int r, int c) { return d_[static_cast<size_t>(r) * cols_ + c]; }
  double at(int r, int c) const { return d_[static_cast<size_t>(r) * cols_ + c]; }

  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> d_;
};

Matrix matmul(const Matrix& a, const Matrix& b);          // a(m,k) * b(k,n)
Matrix matmul_at_b(const Matrix& a, const Matrix& b);     // aᵀ(k,m) * b(k,n)
Matrix matmul_a_bt(const Matrix& a, const Matrix& b);     // a(m,k) * bᵀ(n,k)
void relu_inplace(Matrix& m);
/// grad ⊙ (act > 0), elementwise.
Matrix relu_backward(const Matrix& grad, const Matrix& act);
void softmax_rows_inplace(Matrix& m);
void add_scaled_inplace(Matrix& acc, const Matrix& x, double scale);
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Square sparse matrix in coordinate-list form, entries sorted by
/// (row, col). `source_hash` records the raw adjacency it was derived from
/// so double-normalization is detectable.
struct SparseMatrix {
  struct Entry {
    int row;
    int col;
    double value;
  };
  int n = 0;
  std::vector<Entry> entries;
  std::uint64_t source_hash = 0;
};

/// s * d — per-row accumulation in entry order (deterministic).
Matrix spmm(const SparseMatrix& s, const Matrix& d);
/// sᵀ * d.
Matrix spmm_transposed(const SparseMatrix& s, const Matrix& d);
/// Dense copy, for the test oracles.
Matrix to_dense(const SparseMatrix& s);

std::uint64_t fnv1a64(const void* data, std::size_t len);

}  // namespace trojanscope
