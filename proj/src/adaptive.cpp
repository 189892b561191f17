#include "afpgnn/adaptive.hpp"

#include <cmath>
#include <stdexcept>

#include "afpgnn/kernels.hpp"

namespace afpgnn {

std::array<double, 3> softmax3(const std::array<double, 3>& w) {
  const double mx = std::max({w[0], w[1], w[2]});
  std::array<double, 3> a{};
  double z = 0.0;
  for (int i = 0; i < 3; ++i) {
    a[i] = std::exp(w[i] - mx);
    z += a[i];
  }
  for (int i = 0; i < 3; ++i) a[i] /= z;
  return a;
}

std::vector<double> pool_max(const DenseMatrix& x,
                             std::vector<std::uint32_t>* argmax) {
  if (x.rows == 0) throw std::invalid_argument("pool_max: empty matrix");
  return col_max(x, argmax);
}

std::vector<double> pool_avg(const DenseMatrix& x) {
  if (x.rows == 0) throw std::invalid_argument("pool_avg: empty matrix");
  return col_mean(x);
}

namespace {

void row_pools(const DenseMatrix& x, std::vector<double>& mx,
               std::vector<double>& av, std::vector<std::uint32_t>& argmax) {
  mx.resize(x.rows);
  av.resize(x.rows);
  argmax.resize(x.rows);
  for (std::size_t i = 0; i < x.rows; ++i) {
    const double* xi = x.row(i);
    double m = xi[0], s = 0.0;
    std::uint32_t arg = 0;
    for (std::size_t f = 0; f < x.cols; ++f) {
      s += xi[f];
      if (xi[f] > m) {
        m = xi[f];
        arg = std::uint32_t(f);
      }
    }
    mx[i] = m;
    av[i] = s / double(x.cols);
    argmax[i] = arg;
  }
}

}  // namespace

DenseMatrix adaptive_mix(const DenseMatrix& x, const AdaptiveFeatureParams& p,
                         PoolAxis axis, AdaptiveCache* cache) {
  if (x.rows == 0 || x.cols == 0)
    throw std::invalid_argument("adaptive_mix: empty matrix");
  for (double wi : p.w)
    if (!std::isfinite(wi))
      throw std::invalid_argument("adaptive_mix: non-finite mixing weight");

  const auto alpha = softmax3(p.w);
  std::vector<double> mx, av;
  std::vector<std::uint32_t> argmax;
  if (axis == PoolAxis::nodes) {
    mx = col_max(x, &argmax);
    av = col_mean(x);
  } else {
    row_pools(x, mx, av, argmax);
  }

  DenseMatrix out(x.rows, x.cols);
  const std::int64_t n = std::int64_t(x.rows);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const double* xi = x.row(std::size_t(i));
    double* oi = out.row(std::size_t(i));
    if (axis == PoolAxis::nodes) {
      for (std::size_t f = 0; f < x.cols; ++f)
        oi[f] = alpha[0] * xi[f] + alpha[1] * mx[f] + alpha[2] * av[f];
    } else {
      const double c = alpha[1] * mx[std::size_t(i)] + alpha[2] * av[std::size_t(i)];
      for (std::size_t f = 0; f < x.cols; ++f) oi[f] = alpha[0] * xi[f] + c;
    }
  }

  if (cache) {
    cache->axis = axis;
    cache->frozen = p.frozen;
    cache->alpha = alpha;
    cache->mx = std::move(mx);
    cache->av = std::move(av);
    cache->argmax = std::move(argmax);
    cache->x = x;
  }
  return out;
}

AdaptiveGrads adaptive_mix_backward(const AdaptiveCache& cache,
                                    const DenseMatrix& d_out) {
  const DenseMatrix& x = cache.x;
  if (!d_out.same_shape(x))
    throw std::invalid_argument("adaptive_mix_backward: shape mismatch");
  const auto& a = cache.alpha;
  AdaptiveGrads g;
  g.dx = DenseMatrix(x.rows, x.cols);

  double d_a1 = frob_dot(d_out, x);
  double d_a2 = 0.0, d_a3 = 0.0;

  if (cache.axis == PoolAxis::nodes) {
    const auto cs = col_sum(d_out);
    for (std::size_t f = 0; f < x.cols; ++f) {
      d_a2 += cs[f] * cache.mx[f];
      d_a3 += cs[f] * cache.av[f];
    }
    const std::int64_t n = std::int64_t(x.rows);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      const double* di = d_out.row(std::size_t(i));
      double* gi = g.dx.row(std::size_t(i));
      for (std::size_t f = 0; f < x.cols; ++f) {
        double v = a[0] * di[f] + a[2] * cs[f] / double(x.rows);
        if (cache.argmax[f] == std::uint32_t(i)) v += a[1] * cs[f];
        gi[f] = v;
      }
    }
  } else {
    for (std::size_t i = 0; i < x.rows; ++i) {
      const double* di = d_out.row(i);
      double rs = 0.0;
      for (std::size_t f = 0; f < x.cols; ++f) rs += di[f];
      d_a2 += rs * cache.mx[i];
      d_a3 += rs * cache.av[i];
      double* gi = g.dx.row(i);
      for (std::size_t f = 0; f < x.cols; ++f)
        gi[f] = a[0] * di[f] + a[2] * rs / double(x.cols);
      gi[cache.argmax[i]] += a[1] * rs;
    }
  }

  if (!cache.frozen) {
    // Softmax jacobian: dw_i = a_i * (d_alpha_i - sum_j a_j d_alpha_j).
    const double inner = a[0] * d_a1 + a[1] * d_a2 + a[2] * d_a3;
    g.dw[0] = a[0] * (d_a1 - inner);
    g.dw[1] = a[1] * (d_a2 - inner);
    g.dw[2] = a[2] * (d_a3 - inner);
  }
  return g;
}

}  // namespace afpgnn
