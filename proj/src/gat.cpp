#include "afpgnn/gat.hpp"

#include <cmath>
#include <stdexcept>

#include "afpgnn/activations.hpp"
#include "afpgnn/kernels.hpp"

namespace afpgnn {

std::vector<double> attention_coefficients(const DenseMatrix& h,
                                           const SparseAdjacency& adj,
                                           const std::vector<double>& a,
                                           double leaky_slope,
                                           AttentionCache* cache) {
  const std::size_t n = h.rows, d = h.cols;
  if (adj.node_count != n)
    throw std::invalid_argument("attention_coefficients: node count mismatch");
  if (a.size() != 2 * d)
    throw std::invalid_argument("attention_coefficients: kernel length");
  for (std::size_t i = 0; i < n; ++i)
    if (adj.degree(i) == 0)
      throw std::runtime_error(
          "attention_coefficients: empty neighbor row (missing self-loop?)");

  std::vector<double> s1(n), s2(n);
  const std::int64_t ni = std::int64_t(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < ni; ++i) {
    const double* hi = h.row(std::size_t(i));
    double u = 0.0, v = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      u += a[k] * hi[k];
      v += a[d + k] * hi[k];
    }
    s1[std::size_t(i)] = u;
    s2[std::size_t(i)] = v;
  }

  std::vector<double> alpha(adj.edge_count());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < ni; ++i) {
    const std::int64_t b = adj.row_offsets[std::size_t(i)];
    const std::int64_t e = adj.row_offsets[std::size_t(i) + 1];
    double mx = -1e300;
    for (std::int64_t p = b; p < e; ++p) {
      const double score =
          leaky_relu(s1[std::size_t(i)] + s2[adj.col_indices[std::size_t(p)]],
                     leaky_slope);
      alpha[std::size_t(p)] = score;
      if (score > mx) mx = score;
    }
    double z = 0.0;
    for (std::int64_t p = b; p < e; ++p) {
      alpha[std::size_t(p)] = std::exp(alpha[std::size_t(p)] - mx);
      z += alpha[std::size_t(p)];
    }
    for (std::int64_t p = b; p < e; ++p) alpha[std::size_t(p)] /= z;
  }

  if (cache) {
    cache->s1 = std::move(s1);
    cache->s2 = std::move(s2);
    cache->alpha = alpha;
  }
  return alpha;
}

namespace {

// out_i = sum_{j in N_i} alpha_ij * h_j
DenseMatrix aggregate(const std::vector<double>& alpha,
                      const SparseAdjacency& adj, const DenseMatrix& h) {
  DenseMatrix out(h.rows, h.cols);
  const std::int64_t n = std::int64_t(h.rows);
  const std::size_t d = h.cols;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    double* oi = out.row(std::size_t(i));
    for (std::int64_t p = adj.row_offsets[std::size_t(i)];
         p < adj.row_offsets[std::size_t(i) + 1]; ++p) {
      const double w = alpha[std::size_t(p)];
      const double* hj = h.row(adj.col_indices[std::size_t(p)]);
      for (std::size_t k = 0; k < d; ++k) oi[k] += w * hj[k];
    }
  }
  return out;
}

struct HeadBackwardOut {
  DenseMatrix dh;  // gradient wrt projected features
  std::vector<double> da;
};

// Backward through softmax attention + aggregation for one head, given the
// upstream gradient on the head's aggregated output. All incoming-edge sums
// run through reverse_edge so each output row is owned by one thread.
HeadBackwardOut head_attention_backward(const HeadCache& hc,
                                        const SparseAdjacency& adj,
                                        const std::vector<double>& a,
                                        double leaky_slope,
                                        const DenseMatrix& up) {
  const std::size_t n = hc.h.rows, d = hc.h.cols;
  const auto& alpha = hc.att.alpha;
  const auto& s1 = hc.att.s1;
  const auto& s2 = hc.att.s2;

  std::vector<double> dpre(adj.edge_count());
  std::vector<double> ds1(n), ds2(n);
  const std::int64_t ni = std::int64_t(n);

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < ni; ++i) {
    const std::int64_t b = adj.row_offsets[std::size_t(i)];
    const std::int64_t e = adj.row_offsets[std::size_t(i) + 1];
    const double* ui = up.row(std::size_t(i));
    double dot = 0.0;
    for (std::int64_t p = b; p < e; ++p) {
      const double* hj = h_row(hc, adj.col_indices[std::size_t(p)]);
      double da_p = 0.0;
      for (std::size_t k = 0; k < d; ++k) da_p += ui[k] * hj[k];
      dpre[std::size_t(p)] = da_p;  // temporarily holds d alpha
      dot += alpha[std::size_t(p)] * da_p;
    }
    double row_ds1 = 0.0;
    for (std::int64_t p = b; p < e; ++p) {
      const double dscore =
          alpha[std::size_t(p)] * (dpre[std::size_t(p)] - dot);
      const double pre =
          s1[std::size_t(i)] + s2[adj.col_indices[std::size_t(p)]];
      const double g = dscore * leaky_relu_grad(pre, leaky_slope);
      dpre[std::size_t(p)] = g;
      row_ds1 += g;
    }
    ds1[std::size_t(i)] = row_ds1;
  }

#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < ni; ++j) {
    double s = 0.0;
    for (std::int64_t p = adj.row_offsets[std::size_t(j)];
         p < adj.row_offsets[std::size_t(j) + 1]; ++p)
      s += dpre[std::size_t(adj.reverse_edge[std::size_t(p)])];
    ds2[std::size_t(j)] = s;
  }

  HeadBackwardOut out;
  out.dh = DenseMatrix(n, d);
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < ni; ++v) {
    double* dv = out.dh.row(std::size_t(v));
    for (std::int64_t p = adj.row_offsets[std::size_t(v)];
         p < adj.row_offsets[std::size_t(v) + 1]; ++p) {
      const double w = alpha[std::size_t(adj.reverse_edge[std::size_t(p)])];
      const double* ui = up.row(adj.col_indices[std::size_t(p)]);
      for (std::size_t k = 0; k < d; ++k) dv[k] += w * ui[k];
    }
    const double g1 = ds1[std::size_t(v)], g2 = ds2[std::size_t(v)];
    for (std::size_t k = 0; k < d; ++k)
      dv[k] += g1 * a[k] + g2 * a[d + k];
  }

  out.da.assign(2 * d, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    const double* hv = hc.h.row(v);
    for (std::size_t k = 0; k < d; ++k) {
      out.da[k] += ds1[v] * hv[k];
      out.da[d + k] += ds2[v] * hv[k];
    }
  }
  return out;
}

const double* h_row(const HeadCache& hc, std::uint32_t j) {
  return hc.h.row(j);
}

}  // namespace

DenseMatrix gat_head_forward(const DenseMatrix& x, const SparseAdjacency& adj,
                             const AttentionHeadParams& head,
                             double leaky_slope, HeadCache* cache) {
  if (x.cols != head.W.rows)
    throw std::invalid_argument("gat_head_forward: projection shape mismatch");
  HeadCache local;
  HeadCache& hc = cache ? *cache : local;
  matmul_nn(x, head.W, hc.h);
  attention_coefficients(hc.h, adj, head.a, leaky_slope, &hc.att);
  return aggregate(hc.att.alpha, adj, hc.h);
}

DenseMatrix gat_layer_forward(const DenseMatrix& x, const SparseAdjacency& adj,
                              const GatLayerParams& params,
                              GatLayerCache* cache) {
  if (params.heads.empty())
    throw std::invalid_argument("gat_layer_forward: no heads");
  const std::size_t k = params.heads.size();
  const std::size_t d = params.heads[0].W.cols;
  for (const auto& h : params.heads)
    if (h.W.rows != x.cols || h.W.cols != d || h.a.size() != 2 * d)
      throw std::invalid_argument("gat_layer_forward: head shape mismatch");

  GatLayerCache local;
  GatLayerCache& lc = cache ? *cache : local;
  lc.adj = &adj;
  lc.heads.resize(k);
  lc.prelu_slope = params.prelu_slope;
  lc.leaky_slope = params.leaky_slope;

  DenseMatrix s(x.rows, d);
  for (std::size_t h = 0; h < k; ++h) {
    DenseMatrix out = gat_head_forward(x, adj, params.heads[h],
                                       params.leaky_slope, &lc.heads[h]);
    const double inv_k = 1.0 / double(k);
    for (std::size_t e = 0; e < s.data.size(); ++e)
      s.data[e] += inv_k * out.data[e];
  }

  DenseMatrix z(x.rows, d);
  for (std::size_t e = 0; e < s.data.size(); ++e)
    z.data[e] = prelu(s.data[e], params.prelu_slope);

  if (cache) {
    lc.x = x;
    lc.s = std::move(s);
  }
  return z;
}

GatLayerGrads gat_layer_backward(const GatLayerCache& cache,
                                 const DenseMatrix& dz) {
  if (!dz.same_shape(cache.s))
    throw std::invalid_argument("gat_layer_backward: shape mismatch");
  const std::size_t k = cache.heads.size();
  const SparseAdjacency& adj = *cache.adj;

  GatLayerGrads g;
  g.heads.resize(k);

  DenseMatrix ds(dz.rows, dz.cols);
  double d_slope = 0.0;
  for (std::size_t e = 0; e < dz.data.size(); ++e) {
    const double pre = cache.s.data[e];
    ds.data[e] = dz.data[e] * prelu_grad_input(pre, cache.prelu_slope);
    d_slope += dz.data[e] * prelu_grad_slope(pre);
  }
  g.d_prelu_slope = d_slope;

  // Head average: each head receives ds / K.
  DenseMatrix up(ds.rows, ds.cols);
  const double inv_k = 1.0 / double(k);
  for (std::size_t e = 0; e < ds.data.size(); ++e)
    up.data[e] = ds.data[e] * inv_k;

  g.dx = DenseMatrix(cache.x.rows, cache.x.cols);
  for (std::size_t h = 0; h < k; ++h) {
    const HeadCache& hc = cache.heads[h];
    const std::size_t d = hc.h.cols;
    std::vector<double> a_dummy;  // kernel reconstructed from cache? no:
    // the attention kernel is needed for the s1/s2 chain; the layer cache
    // does not copy the params, so the caller guarantees params are alive;
    // we stash the kernel inside the head cache at forward time instead.
    (void)a_dummy;
    HeadBackwardOut hb = head_attention_backward(hc, adj, hc.kernel,
                                                 cache.leaky_slope, up);
    g.heads[h].da = std::move(hb.da);
    matmul_tn(cache.x, hb.dh, g.heads[h].dW);
    DenseMatrix dx_h;
    matmul_nt(hb.dh, hc.w_ref, dx_h);
    for (std::size_t e = 0; e < g.dx.data.size(); ++e)
      g.dx.data[e] += dx_h.data[e];
  }
  return g;
}

}  // namespace afpgnn
