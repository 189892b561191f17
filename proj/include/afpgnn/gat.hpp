#pragma once

#include <vector>

#include "afpgnn/matrix.hpp"
#include "afpgnn/sparse.hpp"

namespace afpgnn {

// One attention head: projection W (F_in x F') and attention kernel a of
// length 2*F', applied to the concatenation [W x_i || W x_j].
struct AttentionHeadParams {
  DenseMatrix W;
  std::vector<double> a;
};

struct GatLayerParams {
  std::vector<AttentionHeadParams> heads;
  double prelu_slope = 0.2;  // learnable, shared across outputs
  double leaky_slope = 0.2;  // fixed
};

struct AttentionCache {
  std::vector<double> s1, s2;    // a1.h_i and a2.h_i per node
  std::vector<double> alpha;     // softmax weights, aligned with adjacency edges
};

// Per-edge attention weights for projected features H: softmax over each
// node's neighborhood of LeakyReLU(a1.h_i + a2.h_j), max-subtracted per row.
std::vector<double> attention_coefficients(const DenseMatrix& h,
                                           const SparseAdjacency& adj,
                                           const std::vector<double>& a,
                                           double leaky_slope,
                                           AttentionCache* cache = nullptr);

struct HeadCache {
  DenseMatrix h;  // projected features
  AttentionCache att;
};

// Pre-activation aggregation sum_j alpha_ij (W x_j); activation is applied
// at the layer level after head averaging.
DenseMatrix gat_head_forward(const DenseMatrix& x, const SparseAdjacency& adj,
                             const AttentionHeadParams& head,
                             double leaky_slope, HeadCache* cache = nullptr);

struct GatLayerCache {
  const SparseAdjacency* adj = nullptr;
  DenseMatrix x;
  std::vector<HeadCache> heads;
  DenseMatrix s;  // head average, pre-PReLU
  double prelu_slope = 0.0;
  double leaky_slope = 0.0;
};

// Heads averaged (1/K), then PReLU with the shared learnable slope.
DenseMatrix gat_layer_forward(const DenseMatrix& x, const SparseAdjacency& adj,
                              const GatLayerParams& params,
                              GatLayerCache* cache = nullptr);

struct HeadGrads {
  DenseMatrix dW;
  std::vector<double> da;
};

struct GatLayerGrads {
  DenseMatrix dx;
  std::vector<HeadGrads> heads;
  double d_prelu_slope = 0.0;
};

GatLayerGrads gat_layer_backward(const GatLayerCache& cache,
                                 const DenseMatrix& dz);

}  // namespace afpgnn
