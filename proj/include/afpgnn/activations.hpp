#pragma once

#include <cmath>

namespace afpgnn {

// Numerically stable logistic; exact 0.5 at 0, no overflow for |x| <= 700.
inline double sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  double e = std::exp(x);
  return e / (1.0 + e);
}

// log(1 + e^x) without overflow; softplus(x) = -log(sigmoid(-x)).
inline double softplus(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

inline double log_sigmoid(double x) { return -softplus(-x); }

inline double leaky_relu(double x, double slope) {
  return x >= 0.0 ? x : slope * x;
}

// Right derivative at the kink: slope 1 at x == 0.
inline double leaky_relu_grad(double x, double slope) {
  return x >= 0.0 ? 1.0 : slope;
}

inline double prelu(double x, double learned_slope) {
  return x >= 0.0 ? x : learned_slope * x;
}

inline double prelu_grad_input(double x, double learned_slope) {
  return x >= 0.0 ? 1.0 : learned_slope;
}

// d prelu / d slope; zero on the nonnegative side (right convention at 0).
inline double prelu_grad_slope(double x) { return x >= 0.0 ? 0.0 : x; }

}  // namespace afpgnn
