#pragma once

#include <array>
#include <vector>

#include "afpgnn/matrix.hpp"
#include "afpgnn/sparse.hpp"

// Plain scalar-loop implementations, written directly from the defining
// formulas and kept deliberately independent of the production kernels.
// Tests use them as oracles; the benchmark uses them as the serial baseline.
namespace afpgnn::ref {

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

std::vector<double> pool_max(const DenseMatrix& x);
std::vector<double> pool_avg(const DenseMatrix& x);

std::array<double, 3> softmax3(const std::array<double, 3>& w);

// out[i,f] = a1*X[i,f] + a2*max_f + a3*avg_f with a = softmax(w).
DenseMatrix adaptive_mix(const DenseMatrix& x, const std::array<double, 3>& w);

// Full N-by-N attention matrix from per-edge exp/normalize, then a dense
// multiply: the brute-force route for one attention head.
// h = projected features (N x D), a = attention kernel (2D).
DenseMatrix dense_attention_matrix(const DenseMatrix& h,
                                   const SparseAdjacency& adj,
                                   const std::vector<double>& a,
                                   double leaky_slope);
DenseMatrix gat_head(const DenseMatrix& x, const SparseAdjacency& adj,
                     const DenseMatrix& w, const std::vector<double>& a,
                     double leaky_slope);

std::vector<double> readout(const DenseMatrix& z);

double discriminate(const std::vector<double>& z, const std::vector<double>& t,
                    const DenseMatrix& w_d);

// Minimization form of the binary cross-entropy objective, term by term.
double infomax_loss(const DenseMatrix& z_pos, const DenseMatrix& z_neg,
                    const std::vector<double>& t, const DenseMatrix& w_d);

struct MetricsOracle {
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  double macro_recall = 0.0;
};
MetricsOracle metrics(const std::vector<int>& y_true,
                      const std::vector<int>& y_pred, int class_count);

// Full-batch multinomial logistic regression trained with Adam, scalar loops
// throughout; mirrors the probe's stated algorithm step for step.
struct ProbeOracleResult {
  DenseMatrix w;  // (d+1) x c, last row is the bias
};
ProbeOracleResult train_logreg(const DenseMatrix& z,
                               const std::vector<int>& labels,
                               const std::vector<std::size_t>& train_idx,
                               const std::vector<std::size_t>& val_idx,
                               int class_count, double lr, int epochs,
                               double l2, std::uint64_t seed);

}  // namespace afpgnn::ref
