#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace afpgnn {

// Flat, named window onto one learnable array. Optimizer and gradient
// checker iterate groups in the order given; that order is part of the
// determinism contract.
struct ParamView {
  std::string name;
  double* data = nullptr;
  std::size_t size = 0;
};

inline std::size_t total_size(const std::vector<ParamView>& views) {
  std::size_t n = 0;
  for (const auto& v : views) n += v.size;
  return n;
}

}  // namespace afpgnn
