#include "ref_ops.hpp"

#include <cmath>
#include <stdexcept>

#include "afpgnn/rng.hpp"

namespace afpgnn::ref {

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("ref::matmul shape");
  DenseMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < a.cols; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

std::vector<double> pool_max(const DenseMatrix& x) {
  if (x.rows == 0) throw std::invalid_argument("ref::pool_max empty");
  std::vector<double> m(x.cols);
  for (std::size_t f = 0; f < x.cols; ++f) {
    double best = x(0, f);
    for (std::size_t i = 1; i < x.rows; ++i)
      if (x(i, f) > best) best = x(i, f);
    m[f] = best;
  }
  return m;
}

std::vector<double> pool_avg(const DenseMatrix& x) {
  if (x.rows == 0) throw std::invalid_argument("ref::pool_avg empty");
  std::vector<double> m(x.cols);
  for (std::size_t f = 0; f < x.cols; ++f) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.rows; ++i) s += x(i, f);
    m[f] = s / double(x.rows);
  }
  return m;
}

std::array<double, 3> softmax3(const std::array<double, 3>& w) {
  double mx = std::max({w[0], w[1], w[2]});
  std::array<double, 3> e{};
  double z = 0.0;
  for (int i = 0; i < 3; ++i) {
    e[i] = std::exp(w[i] - mx);
    z += e[i];
  }
  for (int i = 0; i < 3; ++i) e[i] /= z;
  return e;
}

DenseMatrix adaptive_mix(const DenseMatrix& x,
                         const std::array<double, 3>& w) {
  auto a = softmax3(w);
  auto mp = pool_max(x);
  auto ap = pool_avg(x);
  DenseMatrix out(x.rows, x.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t f = 0; f < x.cols; ++f)
      out(i, f) = a[0] * x(i, f) + a[1] * mp[f] + a[2] * ap[f];
  return out;
}

DenseMatrix dense_attention_matrix(const DenseMatrix& h,
                                   const SparseAdjacency& adj,
                                   const std::vector<double>& a,
                                   double leaky_slope) {
  const std::size_t n = h.rows, d = h.cols;
  if (a.size() != 2 * d) throw std::invalid_argument("ref attention kernel");
  DenseMatrix att(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double z = 0.0;
    for (std::uint32_t j : adj.neighbors(i)) {
      double score = 0.0;
      for (std::size_t k = 0; k < d; ++k)
        score += a[k] * h(i, k) + a[d + k] * h(j, k);
      if (score < 0.0) score *= leaky_slope;
      att(i, j) = std::exp(score);
      z += att(i, j);
    }
    for (std::uint32_t j : adj.neighbors(i)) att(i, j) /= z;
  }
  return att;
}

DenseMatrix gat_head(const DenseMatrix& x, const SparseAdjacency& adj,
                     const DenseMatrix& w, const std::vector<double>& a,
                     double leaky_slope) {
  DenseMatrix h = matmul(x, w);
  DenseMatrix att = dense_attention_matrix(h, adj, a, leaky_slope);
  return matmul(att, h);
}

std::vector<double> readout(const DenseMatrix& z) {
  if (z.rows == 0) throw std::invalid_argument("ref::readout empty");
  std::vector<double> t(z.cols, 0.0);
  for (std::size_t f = 0; f < z.cols; ++f) {
    double s = 0.0;
    for (std::size_t i = 0; i < z.rows; ++i) s += z(i, f);
    t[f] = s / double(z.rows);
  }
  return t;
}

double discriminate(const std::vector<double>& z, const std::vector<double>& t,
                    const DenseMatrix& w_d) {
  if (z.size() != w_d.rows || t.size() != w_d.cols)
    throw std::invalid_argument("ref::discriminate shape");
  double logit = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      logit += z[i] * w_d(i, j) * t[j];
  return 1.0 / (1.0 + std::exp(-logit));
}

double infomax_loss(const DenseMatrix& z_pos, const DenseMatrix& z_neg,
                    const std::vector<double>& t, const DenseMatrix& w_d) {
  const std::size_t n = z_pos.rows, m = z_neg.rows;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> zi(z_pos.row(i), z_pos.row(i) + z_pos.cols);
    acc += std::log(discriminate(zi, t, w_d));
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double> zj(z_neg.row(j), z_neg.row(j) + z_neg.cols);
    acc += std::log(1.0 - discriminate(zj, t, w_d));
  }
  return -acc / double(n + m);
}

MetricsOracle metrics(const std::vector<int>& y_true,
                      const std::vector<int>& y_pred, int class_count) {
  MetricsOracle out;
  const std::size_t n = y_true.size();
  std::size_t correct = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (y_true[i] == y_pred[i]) ++correct;
  out.accuracy = double(correct) / double(n);
  double f1_sum = 0.0, rec_sum = 0.0;
  for (int c = 0; c < class_count; ++c) {
    double tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (y_pred[i] == c && y_true[i] == c) tp++;
      if (y_pred[i] == c && y_true[i] != c) fp++;
      if (y_pred[i] != c && y_true[i] == c) fn++;
    }
    double prec = (tp + fp) > 0 ? tp / (tp + fp) : 0.0;
    double rec = (tp + fn) > 0 ? tp / (tp + fn) : 0.0;
    double f1 = (prec + rec) > 0 ? 2 * prec * rec / (prec + rec) : 0.0;
    f1_sum += f1;
    rec_sum += rec;
  }
  out.macro_f1 = f1_sum / class_count;
  out.macro_recall = rec_sum / class_count;
  return out;
}

ProbeOracleResult train_logreg(const DenseMatrix& z,
                               const std::vector<int>& labels,
                               const std::vector<std::size_t>& train_idx,
                               const std::vector<std::size_t>& val_idx,
                               int class_count, double lr, int epochs,
                               double l2, std::uint64_t seed) {
  const std::size_t d = z.cols;
  const std::size_t c = std::size_t(class_count);
  DenseMatrix w(d + 1, c);  // last row = bias
  Rng rng(seed);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < c; ++j) w(i, j) = rng.uniform(-0.01, 0.01);

  DenseMatrix m(d + 1, c), v(d + 1, c);
  const double b1 = 0.9, b2 = 0.999, eps = 1e-8;

  DenseMatrix best = w;
  double best_acc = -1.0;

  auto predict = [&](std::size_t row) {
    int arg = 0;
    double bestl = -1e300;
    for (std::size_t j = 0; j < c; ++j) {
      double logit = w(d, j);
      for (std::size_t k = 0; k < d; ++k) logit += z(row, k) * w(k, j);
      if (logit > bestl) {
        bestl = logit;
        arg = int(j);
      }
    }
    return arg;
  };

  for (int e = 1; e <= epochs; ++e) {
    DenseMatrix g(d + 1, c);
    for (std::size_t r : train_idx) {
      std::vector<double> logit(c);
      double mx = -1e300;
      for (std::size_t j = 0; j < c; ++j) {
        double s = w(d, j);
        for (std::size_t k = 0; k < d; ++k) s += z(r, k) * w(k, j);
        logit[j] = s;
        mx = std::max(mx, s);
      }
      double zsum = 0.0;
      for (std::size_t j = 0; j < c; ++j) {
        logit[j] = std::exp(logit[j] - mx);
        zsum += logit[j];
      }
      for (std::size_t j = 0; j < c; ++j) {
        double p = logit[j] / zsum;
        double delta = p - (int(j) == labels[r] ? 1.0 : 0.0);
        delta /= double(train_idx.size());
        for (std::size_t k = 0; k < d; ++k) g(k, j) += delta * z(r, k);
        g(d, j) += delta;
      }
    }
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < c; ++j) g(k, j) += l2 * w(k, j);

    const double c1 = 1.0 - std::pow(b1, double(e));
    const double c2 = 1.0 - std::pow(b2, double(e));
    for (std::size_t i = 0; i < w.data.size(); ++i) {
      m.data[i] = b1 * m.data[i] + (1 - b1) * g.data[i];
      v.data[i] = b2 * v.data[i] + (1 - b2) * g.data[i] * g.data[i];
      w.data[i] -= lr * (m.data[i] / c1) / (std::sqrt(v.data[i] / c2) + eps);
    }

    if (!val_idx.empty()) {
      std::size_t ok = 0;
      for (std::size_t r : val_idx)
        if (predict(r) == labels[r]) ++ok;
      double acc = double(ok) / double(val_idx.size());
      if (acc > best_acc) {
        best_acc = acc;
        best = w;
      }
    } else {
      best = w;
    }
  }
  return {best};
}

}  // namespace afpgnn::ref
