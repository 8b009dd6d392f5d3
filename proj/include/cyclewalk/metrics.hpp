#pragma once

// Distances between node distributions.

#include <cmath>
#include <stdexcept>
#include <string>

#include "cyclewalk/walk.hpp"

namespace cyclewalk {

// Total variation distance (1/2) sum_v |p(v) - q(v)|.
inline double tv(const Distribution& p, const Distribution& q) {
  if (p.d != q.d) {
    throw std::invalid_argument("distribution length mismatch: " +
                                std::to_string(p.d) + " vs " +
                                std::to_string(q.d));
  }
  double acc = 0.0;
  for (int v = 0; v < p.d; ++v) {
    acc += std::abs(p.probs[v] - q.probs[v]);
  }
  return 0.5 * acc;
}

// TV distance from the uniform distribution, (1/2) sum_v |p(v) - 1/d|.
inline double tv_from_uniform(const Distribution& p) {
  double acc = 0.0;
  const double u = 1.0 / p.d;
  for (int v = 0; v < p.d; ++v) {
    acc += std::abs(p.probs[v] - u);
  }
  return 0.5 * acc;
}

}  // namespace cyclewalk
