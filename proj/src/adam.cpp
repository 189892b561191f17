#include "afpgnn/adam.hpp"

#include <cmath>
#include <stdexcept>

namespace afpgnn {

void adam_step(std::span<const ParamView> params,
               std::span<const ParamView> grads, AdamState& state, double lr) {
  if (params.size() != grads.size() || params.size() != state.m.size())
    throw std::invalid_argument("adam_step: group count mismatch");
  state.step += 1;
  const double c1 = 1.0 - std::pow(state.beta1, double(state.step));
  const double c2 = 1.0 - std::pow(state.beta2, double(state.step));
  for (std::size_t g = 0; g < params.size(); ++g) {
    const auto& p = params[g];
    const auto& gr = grads[g];
    if (p.size != gr.size || p.size != state.m[g].size())
      throw std::invalid_argument("adam_step: shape mismatch in group " +
                                  p.name);
    double* m = state.m[g].data();
    double* v = state.v[g].data();
    for (std::size_t i = 0; i < p.size; ++i) {
      const double grad = gr.data[i];
      m[i] = state.beta1 * m[i] + (1.0 - state.beta1) * grad;
      v[i] = state.beta2 * v[i] + (1.0 - state.beta2) * grad * grad;
      const double mhat = m[i] / c1;
      const double vhat = v[i] / c2;
      p.data[i] -= lr * mhat / (std::sqrt(vhat) + state.eps);
    }
  }
}

}  // namespace afpgnn
