#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "afpgnn/matrix.hpp"

namespace afpgnn {

// Three scalar mixing weights, softmax-normalized at use. Starts at the
// uniform mixture; frozen mode keeps them fixed (no gradient).
struct AdaptiveFeatureParams {
  std::array<double, 3> w{0.0, 0.0, 0.0};
  bool frozen = false;
};

// Which axis the max/avg pools reduce over. `nodes` (the default) reduces
// each feature column over all nodes and broadcasts the pooled row back;
// `features` reduces each node row over its features instead.
enum class PoolAxis { nodes, features };

std::array<double, 3> softmax3(const std::array<double, 3>& w);

// Column-wise pooling over nodes (PoolAxis::nodes form).
std::vector<double> pool_max(const DenseMatrix& x,
                             std::vector<std::uint32_t>* argmax = nullptr);
std::vector<double> pool_avg(const DenseMatrix& x);

struct AdaptiveCache {
  PoolAxis axis = PoolAxis::nodes;
  bool frozen = false;
  std::array<double, 3> alpha{};
  std::vector<double> mx, av;           // pooled vectors (F or N long)
  std::vector<std::uint32_t> argmax;    // tie broken to the first index
  DenseMatrix x;                        // forward input
};

// out = alpha1*X + alpha2*maxpool + alpha3*avgpool, pooled vectors broadcast.
DenseMatrix adaptive_mix(const DenseMatrix& x, const AdaptiveFeatureParams& p,
                         PoolAxis axis = PoolAxis::nodes,
                         AdaptiveCache* cache = nullptr);

struct AdaptiveGrads {
  DenseMatrix dx;
  std::array<double, 3> dw{0.0, 0.0, 0.0};  // zero when frozen
};
AdaptiveGrads adaptive_mix_backward(const AdaptiveCache& cache,
                                    const DenseMatrix& d_out);

}  // namespace afpgnn
