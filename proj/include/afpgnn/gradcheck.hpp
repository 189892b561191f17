#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "afpgnn/param_view.hpp"

namespace afpgnn {

struct GradCheckResult {
  double max_rel_err = 0.0;
  std::size_t checked = 0;
  std::size_t skipped_kinks = 0;
  bool all_finite = true;      // false if any probe produced a non-finite loss
  std::string worst_group;
  std::size_t worst_index = 0;
};

// Central finite differences against the supplied analytic gradients.
// `loss` evaluates the objective at the *current* parameter values (the
// checker perturbs them in place and restores each entry afterwards).
// `kink_signs`, when provided, returns the sign pattern of every activation
// kink input in the forward pass; entries whose +h/-h evaluations disagree
// on any sign cross a LeakyReLU/PReLU kink inside the stencil and are
// skipped (counted in skipped_kinks). Relative error per entry is
// |a - n| / max(|a|, |n|, 1e-8).
GradCheckResult grad_check(
    const std::function<double()>& loss,
    const std::function<std::vector<std::int8_t>()>& kink_signs,
    std::span<const ParamView> params, std::span<const ParamView> analytic,
    double h = 1e-5);

}  // namespace afpgnn
