#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "afpgnn/param_view.hpp"

namespace afpgnn {

// Adam with bias correction (Kingma & Ba). Moments mirror the parameter
// groups they were initialized from; step counts whole updates.
struct AdamState {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  std::uint64_t step = 0;
  std::vector<std::vector<double>> m;
  std::vector<std::vector<double>> v;

  void init(std::span<const ParamView> params) {
    step = 0;
    m.clear();
    v.clear();
    for (const auto& p : params) {
      m.emplace_back(p.size, 0.0);
      v.emplace_back(p.size, 0.0);
    }
  }
};

// One update over all groups. Throws on any shape mismatch between params,
// grads and state.
void adam_step(std::span<const ParamView> params,
               std::span<const ParamView> grads, AdamState& state, double lr);

}  // namespace afpgnn
