#include "afpgnn/dropout.hpp"

#include <stdexcept>

namespace afpgnn {

DenseMatrix dropout(const DenseMatrix& m, double p_drop, Rng& rng,
                    bool training) {
  if (!(p_drop >= 0.0 && p_drop < 1.0))
    throw std::invalid_argument("dropout: p_drop must be in [0,1)");
  if (!training) return m;
  DenseMatrix out(m.rows, m.cols);
  const double scale = 1.0 / (1.0 - p_drop);
  for (std::size_t i = 0; i < m.data.size(); ++i) {
    const double u = rng.next_double();
    out.data[i] = u >= p_drop ? m.data[i] * scale : 0.0;
  }
  return out;
}

void dropout_csr(CsrFeatures& X, double p_drop, const Rng& stream) {
  if (!(p_drop >= 0.0 && p_drop < 1.0))
    throw std::invalid_argument("dropout: p_drop must be in [0,1)");
  const double scale = 1.0 / (1.0 - p_drop);
  const std::int64_t n = std::int64_t(X.rows);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::uint64_t base = std::uint64_t(i) * X.cols;
    for (std::int64_t p = X.row_offsets[i]; p < X.row_offsets[i + 1]; ++p) {
      const std::uint64_t raw = stream.peek_at(base + X.col_indices[std::size_t(p)]);
      if (!dropout_keeps(raw, p_drop)) {
        X.values[std::size_t(p)] = 0.0;
      } else {
        X.values[std::size_t(p)] *= scale;
      }
    }
  }
}

}  // namespace afpgnn
