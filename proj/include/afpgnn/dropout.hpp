#pragma once

#include "afpgnn/kernels.hpp"
#include "afpgnn/matrix.hpp"
#include "afpgnn/rng.hpp"

namespace afpgnn {

// Inverted dropout. Entry (i,j) consumes draw number i*cols+j of the stream,
// row-major; survivors are scaled by 1/(1-p_drop) so the expectation is
// preserved. training=false is the identity and consumes nothing.
DenseMatrix dropout(const DenseMatrix& m, double p_drop, Rng& rng,
                    bool training);

// Same mask applied to stored entries only, using the O(1) stream access of
// SplitMix64: entry (i,j) reads the identical draw the dense path would, so
// both paths produce the same matrix. `stream` is the rng state as of the
// start of the dropout block (the caller advances its own rng by rows*cols).
void dropout_csr(CsrFeatures& X, double p_drop, const Rng& stream);

inline bool dropout_keeps(std::uint64_t raw, double p_drop) {
  return Rng::to_double(raw) >= p_drop;
}

}  // namespace afpgnn
