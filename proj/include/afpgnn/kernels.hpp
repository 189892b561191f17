#pragma once

#include <cstdint>
#include <vector>

#include "afpgnn/matrix.hpp"

namespace afpgnn {

// Dense kernels. All parallel loops partition output entries and keep every
// inner summation in a fixed serial order, so results are bitwise identical
// for any worker count (including 1).

// C = A * B
void matmul_nn(const DenseMatrix& A, const DenseMatrix& B, DenseMatrix& C);
// C = A^T * B
void matmul_tn(const DenseMatrix& A, const DenseMatrix& B, DenseMatrix& C);
// C = A * B^T
void matmul_nt(const DenseMatrix& A, const DenseMatrix& B, DenseMatrix& C);

std::vector<double> col_sum(const DenseMatrix& A);
std::vector<double> col_mean(const DenseMatrix& A);
// Column-wise max; argmax receives the first maximizing row per column.
std::vector<double> col_max(const DenseMatrix& A,
                            std::vector<std::uint32_t>* argmax = nullptr);

// sum_ij A[i,j] * B[i,j]
double frob_dot(const DenseMatrix& A, const DenseMatrix& B);

// y = A * x  (A: n x m, x: m)
void matvec(const DenseMatrix& A, const std::vector<double>& x,
            std::vector<double>& y);
// y = A^T * x
void matvec_t(const DenseMatrix& A, const std::vector<double>& x,
              std::vector<double>& y);

// Sparse row-major feature matrix with a column-major view over the same
// value array. Values are mutable per epoch (dropout); the pattern is fixed,
// so the CSC->CSR position map is built once.
struct CsrFeatures {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> row_offsets;
  std::vector<std::uint32_t> col_indices;
  std::vector<double> values;

  std::vector<std::int64_t> col_offsets;
  std::vector<std::int64_t> csc_to_csr;  // csc slot -> index into values
  std::vector<std::uint32_t> csc_rows;   // csc slot -> row index

  static CsrFeatures from_dense(const DenseMatrix& X);
  std::size_t nnz() const { return col_indices.size(); }
};

// C = scale * X * B           (X sparse n x f, B dense f x m)
void spmm(const CsrFeatures& X, const DenseMatrix& B, double scale,
          DenseMatrix& C);
// G += scale * X^T * D        (walks CSC; G dense f x m)
void spmm_t_acc(const CsrFeatures& X, const DenseMatrix& D, double scale,
                DenseMatrix& G);
// sum_ij X[i,j] * D[i, j-th?]: full Frobenius inner product of sparse X with
// a dense matrix of the same shape, via the stored entries only.
double sp_frob_dot(const CsrFeatures& X, const DenseMatrix& D);

}  // namespace afpgnn
