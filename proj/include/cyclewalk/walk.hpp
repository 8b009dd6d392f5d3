#pragma once

// Discrete-time Hadamard walk on a cycle of d nodes: state representation,
// the single-step unitary U = S(H (x) I), and node-space distributions.
//
// Conventions (fixed across the whole library):
//   * amplitude layout: index = s*d + v, coin s in {0,1}, node v in {0..d-1}
//   * coin value s shifts the node by 2s-1 (mod d): s=0 moves -1, s=1 moves +1
//   * the coin is the normalized Hadamard gate (1/sqrt(2))[[1,1],[1,-1]]

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclewalk {

using Complex = std::complex<double>;

inline constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

namespace detail {

inline void require_cycle(int d) {
  if (d < 2) {
    throw std::invalid_argument("cycle length d must be >= 2, got " +
                                std::to_string(d));
  }
}

inline void require_node(int d, int v) {
  if (v < 0 || v >= d) {
    throw std::invalid_argument("node index " + std::to_string(v) +
                                " out of range for d=" + std::to_string(d));
  }
}

}  // namespace detail

// State of the walk: 2d complex amplitudes over the coin (x) node basis.
struct WalkState {
  int d = 0;
  std::vector<Complex> amplitudes;  // size 2d, index s*d + v

  Complex amp(int s, int v) const { return amplitudes[static_cast<std::size_t>(s) * d + v]; }
  Complex& amp(int s, int v) { return amplitudes[static_cast<std::size_t>(s) * d + v]; }

  double norm() const {
    double sq = 0.0;
    for (const Complex& a : amplitudes) sq += std::norm(a);
    return std::sqrt(sq);
  }
};

// Zero-filled state, amplitudes to be set by the caller.
inline WalkState blank_state(int d) {
  detail::require_cycle(d);
  WalkState s;
  s.d = d;
  s.amplitudes.assign(static_cast<std::size_t>(2) * d, Complex{});
  return s;
}

namespace detail {

inline void require_normalized(const WalkState& state, double tol = 1e-8) {
  if (state.d < 2 || state.amplitudes.size() != static_cast<std::size_t>(2) * state.d) {
    throw std::invalid_argument("malformed walk state");
  }
  const double n = state.norm();
  if (std::abs(n - 1.0) > tol) {
    throw std::invalid_argument("walk state is not normalized: |psi| = " +
                                std::to_string(n));
  }
}

}  // namespace detail

// Probability distribution over the d nodes.
struct Distribution {
  int d = 0;
  std::vector<double> probs;  // size d, non-negative, sums to 1
};

// Validates and clamps raw probabilities into a Distribution.
// Entries in [-1e-14, 0) are floating-point dust and clamp to 0; anything
// more negative, or a total off 1 by more than 1e-10, is an error.
inline Distribution make_distribution(std::vector<double> probs) {
  const int d = static_cast<int>(probs.size());
  detail::require_cycle(d);
  double sum = 0.0;
  for (double& p : probs) {
    if (p < -1e-14) {
      throw std::invalid_argument("distribution entry " + std::to_string(p) +
                                  " is negative beyond tolerance");
    }
    if (p < 0.0) p = 0.0;
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    throw std::invalid_argument("distribution sums to " + std::to_string(sum) +
                                ", expected 1");
  }
  return Distribution{d, std::move(probs)};
}

inline Distribution uniform_distribution(int d) {
  detail::require_cycle(d);
  return Distribution{d, std::vector<double>(d, 1.0 / d)};
}

// The normalized Hadamard coin, rows indexed by output coin value.
inline std::array<std::array<Complex, 2>, 2> coin_matrix() {
  return {{{Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}},
           {Complex{kInvSqrt2, 0.0}, Complex{-kInvSqrt2, 0.0}}}};
}

namespace detail {

// One step without the normalization check; out must be a distinct buffer.
inline void step_unchecked(const WalkState& in, WalkState& out) {
  const int d = in.d;
  out.d = d;
  out.amplitudes.resize(static_cast<std::size_t>(2) * d);
  for (int v = 0; v < d; ++v) {
    const Complex a0 = in.amplitudes[v];
    const Complex a1 = in.amplitudes[static_cast<std::size_t>(d) + v];
    // coin, then shift: s=0 to node v-1, s=1 to node v+1
    out.amplitudes[(v + d - 1) % d] = (a0 + a1) * kInvSqrt2;
    out.amplitudes[static_cast<std::size_t>(d) + (v + 1) % d] = (a0 - a1) * kInvSqrt2;
  }
}

}  // namespace detail

// Applies U = S(H (x) I) once.
inline WalkState step(const WalkState& state) {
  detail::require_normalized(state);
  WalkState out;
  detail::step_unchecked(state, out);
  return out;
}

// Applies U n times; evolve(state, 0) returns the state unchanged.
inline WalkState evolve(WalkState state, long long n) {
  if (n < 0) {
    throw std::invalid_argument("step count must be >= 0");
  }
  detail::require_normalized(state);
  if (n == 0) return state;
  WalkState scratch;
  for (long long i = 0; i < n; ++i) {
    detail::step_unchecked(state, scratch);
    std::swap(state, scratch);
  }
  return state;
}

// p(v) = |alpha_{0v}|^2 + |alpha_{1v}|^2.
inline Distribution node_distribution(const WalkState& state) {
  detail::require_normalized(state);
  std::vector<double> p(state.d);
  for (int v = 0; v < state.d; ++v) {
    p[v] = std::norm(state.amp(0, v)) + std::norm(state.amp(1, v));
  }
  return make_distribution(std::move(p));
}

// Cesaro average (1/n) sum_{i=1..n} p_i of the distributions after steps 1..n.
inline Distribution time_averaged_distribution(const WalkState& initial, long long n) {
  if (n < 1) {
    throw std::invalid_argument("time average needs at least one step");
  }
  detail::require_normalized(initial);
  const int d = initial.d;
  std::vector<double> acc(d, 0.0);
  WalkState cur = initial;
  WalkState scratch;
  for (long long i = 0; i < n; ++i) {
    detail::step_unchecked(cur, scratch);
    std::swap(cur, scratch);
    for (int v = 0; v < d; ++v) {
      acc[v] += std::norm(cur.amplitudes[v]) +
                std::norm(cur.amplitudes[static_cast<std::size_t>(d) + v]);
    }
  }
  for (double& p : acc) p /= static_cast<double>(n);
  return make_distribution(std::move(acc));
}

}  // namespace cyclewalk
