#include "afpgnn/gradcheck.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace afpgnn {

GradCheckResult grad_check(
    const std::function<double()>& loss,
    const std::function<std::vector<std::int8_t>()>& kink_signs,
    std::span<const ParamView> params, std::span<const ParamView> analytic,
    double h) {
  if (params.size() != analytic.size())
    throw std::invalid_argument("grad_check: group count mismatch");
  GradCheckResult res;
  for (std::size_t g = 0; g < params.size(); ++g) {
    if (params[g].size != analytic[g].size)
      throw std::invalid_argument("grad_check: shape mismatch in group " +
                                  params[g].name);
    for (std::size_t i = 0; i < params[g].size; ++i) {
      double* slot = params[g].data + i;
      const double saved = *slot;

      *slot = saved + h;
      const double fp = loss();
      std::vector<std::int8_t> sp;
      if (kink_signs) sp = kink_signs();

      *slot = saved - h;
      const double fm = loss();
      std::vector<std::int8_t> sm;
      if (kink_signs) sm = kink_signs();

      *slot = saved;

      if (!std::isfinite(fp) || !std::isfinite(fm)) {
        res.all_finite = false;
        res.max_rel_err = std::numeric_limits<double>::infinity();
        res.worst_group = params[g].name;
        res.worst_index = i;
        return res;
      }
      if (kink_signs && sp != sm) {
        res.skipped_kinks++;
        continue;
      }

      const double numeric = (fp - fm) / (2.0 * h);
      const double a = analytic[g].data[i];
      const double denom = std::max({std::fabs(a), std::fabs(numeric), 1e-8});
      const double rel = std::fabs(a - numeric) / denom;
      res.checked++;
      if (rel > res.max_rel_err) {
        res.max_rel_err = rel;
        res.worst_group = params[g].name;
        res.worst_index = i;
      }
    }
  }
  return res;
}

}  // namespace afpgnn
