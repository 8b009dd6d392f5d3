#pragma once

#include <complex>
#include <random>

#include "cyclewalk/walk.hpp"

namespace testutil {

inline cyclewalk::WalkState random_state(int d, std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  cyclewalk::WalkState state = cyclewalk::blank_state(d);
  for (cyclewalk::Complex& a : state.amplitudes) {
    a = cyclewalk::Complex{gauss(rng), gauss(rng)};
  }
  const double n = state.norm();
  for (cyclewalk::Complex& a : state.amplitudes) a /= n;
  return state;
}

inline cyclewalk::Distribution random_distribution(int d, std::mt19937& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> p(d);
  double sum = 0.0;
  for (double& x : p) {
    x = unif(rng) + 1e-6;
    sum += x;
  }
  for (double& x : p) x /= sum;
  return cyclewalk::make_distribution(std::move(p));
}

inline double max_amp_diff(const cyclewalk::WalkState& a, const cyclewalk::WalkState& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    worst = std::max(worst, std::abs(a.amplitudes[i] - b.amplitudes[i]));
  }
  return worst;
}

inline double max_prob_diff(const cyclewalk::Distribution& a, const cyclewalk::Distribution& b) {
  double worst = 0.0;
  for (int v = 0; v < a.d; ++v) {
    worst = std::max(worst, std::abs(a.probs[v] - b.probs[v]));
  }
  return worst;
}

}  // namespace testutil
