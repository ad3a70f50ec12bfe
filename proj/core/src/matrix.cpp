#include "trojanscope/matrix.hpp"

#include <cmath>

#include "trojanscope/diagnostics.hpp"

namespace trojanscope {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::shape_mismatch, what);
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matmul: inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  const int m = a.rows(), k = a.cols(), n = b.cols();
  for (int i = 0; i < m; ++i) {
    const double* arow = a.data() + static_cast<size_t>(i) * k;
    double* orow = out.data() + static_cast<size_t>(i) * n;
    for (int p = 0; p < k; ++p) {
      double av = arow[p];
      if (av == 0.0) continue;
      const double* brow = b.data() + static_cast<size_t>(p) * n;
      for (int j = 0; j < n; ++j) orow[j] += av * brow[j];
    }
  }
  return out;
}

Matrix matmul_at_b(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), "matmul_at_b: row counts differ");
  Matrix out(a.cols(), b.cols());
  const int m = a.rows(), k = a.cols(), n = b.cols();
  for (int p = 0; p < m; ++p) {
    const double* arow = a.data() + static_cast<size_t>(p) * k;
    const double* brow = b.data() + static_cast<size_t>(p) * n;
    for (int i = 0; i < k; ++i) {
      double av = arow[i];
      if (av == 0.0) continue;
      double* orow = out.data() + static_cast<size_t>(i) * n;
      for (int j = 0; j < n; ++j) orow[j] += av * brow[j];
    }
  }
  return out;
}

Matrix matmul_a_bt(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), "matmul_a_bt: column counts differ");
  Matrix out(a.rows(), b.rows());
  const int m = a.rows(), k = a.cols(), n = b.rows();
  for (int i = 0; i < m; ++i) {
    const double* arow = a.data() + static_cast<size_t>(i) * k;
    double* orow = out.data() + static_cast<size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      const double* brow = b.data() + static_cast<size_t>(j) * k;
      double acc = 0.0;
      for (int p = 0; p < k; ++p) acc += arow[p] * brow[p];
      orow[j] = acc;
    }
  }
  return out;
}

void relu_inplace(Matrix& m) {
  double* d = m.data();
  size_t n = static_cast<size_t>(m.rows()) * m.cols();
  for (size_t i = 0; i < n; ++i) {
    if (d[i] < 0.0) d[i] = 0.0;
  }
}

Matrix relu_backward(const Matrix& grad, const Matrix& act) {
  require(grad.same_shape(act), "relu_backward: shape mismatch");
  Matrix out = grad;
  double* d = out.data();
  const double* a = act.data();
  size_t n = static_cast<size_t>(out.rows()) * out.cols();
  for (size_t i = 0; i < n; ++i) {
    if (a[i] <= 0.0) d[i] = 0.0;
  }
  return out;
}

void softmax_rows_inplace(Matrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    double* row = m.data() + static_cast<size_t>(i) * m.cols();
    double mx = row[0];
    for (int j = 1; j < m.cols(); ++j) mx = std::max(mx, row[j]);
    double sum = 0.0;
    for (int j = 0; j < m.cols(); ++j) {
      row[j] = std::exp(row[j] - mx);
      sum += row[j];
    }
    for (int j = 0; j < m.cols(); ++j) row[j] /= sum;
  }
}

void add_scaled_inplace(Matrix& acc, const Matrix& x, double scale) {
  require(acc.same_shape(x), "add_scaled: shape mismatch");
  double* a = acc.data();
  const double* b = x.data();
  size_t n = static_cast<size_t>(acc.rows()) * acc.cols();
  for (size_t i = 0; i < n; ++i) a[i] += scale * b[i];
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require(a.same_shape(b), "max_abs_diff: shape mismatch");
  double mx = 0.0;
  size_t n = static_cast<size_t>(a.rows()) * a.cols();
  for (size_t i = 0; i < n; ++i) mx = std::max(mx, std::fabs(a.data()[i] - b.data()[i]));
  return mx;
}

Matrix spmm(const SparseMatrix& s, const Matrix& d) {
  require(s.n == d.rows(), "spmm: dimension mismatch");
  Matrix out(s.n, d.cols());
  const int n = d.cols();
  for (const auto& e : s.entries) {
    double* orow = out.data() + static_cast<size_t>(e.row) * n;
    const double* drow = d.data() + static_cast<size_t>(e.col) * n;
    for (int j = 0; j < n; ++j) orow[j] += e.value * drow[j];
  }
  return out;
}

Matrix spmm_transposed(const SparseMatrix& s, const Matrix& d) {
  require(s.n == d.rows(), "spmm_transposed: dimension mismatch");
  Matrix out(s.n, d.cols());
  const int n = d.cols();
  for (const auto& e : s.entries) {
    double* orow = out.data() + static_cast<size_t>(e.col) * n;
    const double* drow = d.data() + static_cast<size_t>(e.row) * n;
    for (int j = 0; j < n; ++j) orow[j] += e.value * drow[j];
  }
  return out;
}

Matrix to_dense(const SparseMatrix& s) {
  Matrix out(s.n, s.n);
  for (const auto& e : s.entries) out.at(e.row, e.col) = e.value;
  return out;
}

std::uint64_t fnv1a64(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace trojanscope
