#include "afpgnn/kernels.hpp"

#include <cassert>
#include <stdexcept>

namespace afpgnn {

void matmul_nn(const DenseMatrix& A, const DenseMatrix& B, DenseMatrix& C) {
  assert(A.cols == B.rows);
  C = DenseMatrix(A.rows, B.cols);
  const std::int64_t n = std::int64_t(A.rows);
  const std::size_t k = A.cols, m = B.cols;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    double* ci = C.row(std::size_t(i));
    const double* ai = A.row(std::size_t(i));
    for (std::size_t p = 0; p < k; ++p) {
      const double a = ai[p];
      if (a == 0.0) continue;
      const double* bp = B.row(p);
      for (std::size_t j = 0; j < m; ++j) ci[j] += a * bp[j];
    }
  }
}

void matmul_tn(const DenseMatrix& A, const DenseMatrix& B, DenseMatrix& C) {
  assert(A.rows == B.rows);
  C = DenseMatrix(A.cols, B.cols);
  const std::int64_t f = std::int64_t(A.cols);
  const std::size_t n = A.rows, m = B.cols;
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < f; ++c) {
    double* out = C.row(std::size_t(c));
    for (std::size_t i = 0; i < n; ++i) {
      const double a = A(i, std::size_t(c));
      if (a == 0.0) continue;
      const double* bi = B.row(i);
      for (std::size_t j = 0; j < m; ++j) out[j] += a * bi[j];
    }
  }
}

void matmul_nt(const DenseMatrix& A, const DenseMatrix& B, DenseMatrix& C) {
  assert(A.cols == B.cols);
  C = DenseMatrix(A.rows, B.rows);
  const std::int64_t n = std::int64_t(A.rows);
  const std::size_t k = A.cols, m = B.rows;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    double* ci = C.row(std::size_t(i));
    const double* ai = A.row(std::size_t(i));
    for (std::size_t j = 0; j < m; ++j) {
      const double* bj = B.row(j);
      double s = 0.0;
      for (std::size_t p = 0; p < k; ++p) s += ai[p] * bj[p];
      ci[j] = s;
    }
  }
}

std::vector<double> col_sum(const DenseMatrix& A) {
  std::vector<double> s(A.cols, 0.0);
  for (std::size_t i = 0; i < A.rows; ++i) {
    const double* ai = A.row(i);
    for (std::size_t j = 0; j < A.cols; ++j) s[j] += ai[j];
  }
  return s;
}

std::vector<double> col_mean(const DenseMatrix& A) {
  if (A.rows == 0) throw std::invalid_argument("col_mean: empty matrix");
  auto s = col_sum(A);
  for (double& v : s) v /= double(A.rows);
  return s;
}

std::vector<double> col_max(const DenseMatrix& A,
                            std::vector<std::uint32_t>* argmax) {
  if (A.rows == 0) throw std::invalid_argument("col_max: empty matrix");
  std::vector<double> m(A.row(0), A.row(0) + A.cols);
  if (argmax) argmax->assign(A.cols, 0);
  for (std::size_t i = 1; i < A.rows; ++i) {
    const double* ai = A.row(i);
    for (std::size_t j = 0; j < A.cols; ++j) {
      if (ai[j] > m[j]) {
        m[j] = ai[j];
        if (argmax) (*argmax)[j] = std::uint32_t(i);
      }
    }
  }
  return m;
}

double frob_dot(const DenseMatrix& A, const DenseMatrix& B) {
  assert(A.same_shape(B));
  double s = 0.0;
  for (std::size_t i = 0; i < A.data.size(); ++i) s += A.data[i] * B.data[i];
  return s;
}

void matvec(const DenseMatrix& A, const std::vector<double>& x,
            std::vector<double>& y) {
  assert(x.size() == A.cols);
  y.assign(A.rows, 0.0);
  for (std::size_t i = 0; i < A.rows; ++i) {
    const double* ai = A.row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < A.cols; ++j) s += ai[j] * x[j];
    y[i] = s;
  }
}

void matvec_t(const DenseMatrix& A, const std::vector<double>& x,
              std::vector<double>& y) {
  assert(x.size() == A.rows);
  y.assign(A.cols, 0.0);
  for (std::size_t i = 0; i < A.rows; ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    const double* ai = A.row(i);
    for (std::size_t j = 0; j < A.cols; ++j) y[j] += xi * ai[j];
  }
}

CsrFeatures CsrFeatures::from_dense(const DenseMatrix& X) {
  CsrFeatures f;
  f.rows = X.rows;
  f.cols = X.cols;
  f.row_offsets.assign(X.rows + 1, 0);
  for (std::size_t i = 0; i < X.rows; ++i) {
    const double* xi = X.row(i);
    std::int64_t c = 0;
    for (std::size_t j = 0; j < X.cols; ++j)
      if (xi[j] != 0.0) ++c;
    f.row_offsets[i + 1] = f.row_offsets[i] + c;
  }
  f.col_indices.resize(std::size_t(f.row_offsets.back()));
  f.values.resize(f.col_indices.size());
  std::size_t e = 0;
  for (std::size_t i = 0; i < X.rows; ++i) {
    const double* xi = X.row(i);
    for (std::size_t j = 0; j < X.cols; ++j) {
      if (xi[j] != 0.0) {
        f.col_indices[e] = std::uint32_t(j);
        f.values[e] = xi[j];
        ++e;
      }
    }
  }

  // CSC view (counting sort by column; stable, so rows ascend per column).
  f.col_offsets.assign(f.cols + 1, 0);
  for (std::uint32_t c : f.col_indices) f.col_offsets[c + 1]++;
  for (std::size_t c = 0; c < f.cols; ++c)
    f.col_offsets[c + 1] += f.col_offsets[c];
  f.csc_to_csr.resize(f.nnz());
  f.csc_rows.resize(f.nnz());
  std::vector<std::int64_t> cur(f.col_offsets.begin(), f.col_offsets.end() - 1);
  for (std::size_t i = 0; i < f.rows; ++i) {
    for (std::int64_t p = f.row_offsets[i]; p < f.row_offsets[i + 1]; ++p) {
      std::uint32_t c = f.col_indices[p];
      f.csc_to_csr[std::size_t(cur[c])] = p;
      f.csc_rows[std::size_t(cur[c])] = std::uint32_t(i);
      cur[c]++;
    }
  }
  return f;
}

void spmm(const CsrFeatures& X, const DenseMatrix& B, double scale,
          DenseMatrix& C) {
  assert(X.cols == B.rows);
  C = DenseMatrix(X.rows, B.cols);
  const std::int64_t n = std::int64_t(X.rows);
  const std::size_t m = B.cols;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    double* ci = C.row(std::size_t(i));
    for (std::int64_t p = X.row_offsets[i]; p < X.row_offsets[i + 1]; ++p) {
      const double v = scale * X.values[std::size_t(p)];
      const double* bp = B.row(X.col_indices[std::size_t(p)]);
      for (std::size_t j = 0; j < m; ++j) ci[j] += v * bp[j];
    }
  }
}

void spmm_t_acc(const CsrFeatures& X, const DenseMatrix& D, double scale,
                DenseMatrix& G) {
  assert(X.rows == D.rows);
  assert(G.rows == X.cols && G.cols == D.cols);
  const std::int64_t f = std::int64_t(X.cols);
  const std::size_t m = D.cols;
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < f; ++c) {
    double* g = G.row(std::size_t(c));
    for (std::int64_t p = X.col_offsets[c]; p < X.col_offsets[c + 1]; ++p) {
      const double v = scale * X.values[std::size_t(X.csc_to_csr[std::size_t(p)])];
      if (v == 0.0) continue;
      const double* di = D.row(X.csc_rows[std::size_t(p)]);
      for (std::size_t j = 0; j < m; ++j) g[j] += v * di[j];
    }
  }
}

double sp_frob_dot(const CsrFeatures& X, const DenseMatrix& D) {
  assert(X.rows == D.rows && X.cols == D.cols);
  double s = 0.0;
  for (std::size_t i = 0; i < X.rows; ++i) {
    const double* di = D.row(i);
    for (std::int64_t p = X.row_offsets[i]; p < X.row_offsets[i + 1]; ++p)
      s += X.values[std::size_t(p)] * di[X.col_indices[std::size_t(p)]];
  }
  return s;
}

}  // namespace afpgnn
