#pragma once

// Analytic eigen system of the Hadamard-walk step operator on a d-cycle and
// the time-averaged limiting distribution for an arbitrary initial state.
//
// The step operator is block-diagonal over Fourier modes of the node space.
// For momentum j (j = 0..d-1) and branch k (k = 0,1) the eigenvalue is
//
//   c_{jk} = ((-1)^k sqrt(1 + cos^2(2 pi j / d)) - i sin(2 pi j / d)) / sqrt(2)
//
// with coin components (1, b_{jk}) attached to the node mode
// sum_v conj(omega_d)^{jv} |v>, omega_d = exp(2 pi i / d).  The conjugate
// mode is the one this (c, b) pair actually diagonalizes under the
// "s=0 moves -1" shift convention; U phi = c phi is enforced by tests.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclewalk/walk.hpp"

namespace cyclewalk {

struct EigenIndex {
  int j = 0;  // momentum index, 0..d-1
  int k = 0;  // branch index, 0 or 1

  friend bool operator==(const EigenIndex&, const EigenIndex&) = default;
};

// One analytic eigenpair: eigenvalue c, normalization a, coin ratio b.
struct EigenPair {
  EigenIndex index;
  Complex eigenvalue;
  double a = 0.0;
  Complex b;
};

// Partition of the 2d eigen indices into equal-eigenvalue classes.
// Cross terms of the limiting distribution survive only within a class.
struct DegeneracyClasses {
  int d = 0;
  std::vector<std::vector<EigenIndex>> classes;
};

namespace detail {

inline void require_eigen_index(int j, int k, int d) {
  require_cycle(d);
  if (j < 0 || j >= d || (k != 0 && k != 1)) {
    throw std::invalid_argument("eigen index (j=" + std::to_string(j) +
                                ", k=" + std::to_string(k) +
                                ") out of range for d=" + std::to_string(d));
  }
}

// omega_d^m for m = 0..d-1, as one table so repeated exponents stay exact.
inline std::vector<Complex> unit_roots(int d) {
  std::vector<Complex> roots(d);
  for (int m = 0; m < d; ++m) {
    roots[m] = std::polar(1.0, 2.0 * std::numbers::pi * m / d);
  }
  return roots;
}

}  // namespace detail

inline Complex eigenvalue(int j, int k, int d) {
  detail::require_eigen_index(j, k, d);
  const double theta = 2.0 * std::numbers::pi * j / d;
  const double root = std::sqrt(1.0 + std::cos(theta) * std::cos(theta));
  const double sign = (k == 0) ? 1.0 : -1.0;
  return Complex{sign * root * kInvSqrt2, -std::sin(theta) * kInvSqrt2};
}

inline EigenPair eigen_pair(int j, int k, int d) {
  detail::require_eigen_index(j, k, d);
  const double theta = 2.0 * std::numbers::pi * j / d;
  const double root = std::sqrt(1.0 + std::cos(theta) * std::cos(theta));
  const double sign = (k == 0) ? 1.0 : -1.0;
  const Complex b = std::polar(1.0, theta) * (sign * root - std::cos(theta));
  const double a = 1.0 / std::sqrt(d * (1.0 + std::norm(b)));
  return EigenPair{{j, k}, eigenvalue(j, k, d), a, b};
}

// The normalized eigenvector as a walk state:
// alpha_{0v} = a conj(omega)^{jv},  alpha_{1v} = a b conj(omega)^{jv}.
inline WalkState eigenvector_state(int j, int k, int d) {
  const EigenPair p = eigen_pair(j, k, d);
  const std::vector<Complex> roots = detail::unit_roots(d);
  WalkState state = blank_state(d);
  for (int v = 0; v < d; ++v) {
    const Complex mode = std::conj(roots[static_cast<std::size_t>(
        (static_cast<long long>(j) * v) % d)]);
    state.amp(0, v) = p.a * mode;
    state.amp(1, v) = p.a * p.b * mode;
  }
  return state;
}

// Equal-eigenvalue classes from the exact index combinatorics.
// Odd d: all 2d eigenvalues are distinct.  Even d: c_{jk} = c_{d/2-j,k}
// (indices mod d), so {0, d/2} merge, {t, d/2-t} and {d-t, d/2+t} merge for
// t = 1..t_max with t_max = floor((d-2)/4); k never mixes since
// c_{j0} != c_{j'1}.  For 4 | d the self-paired j = d/4, 3d/4 stay single.
inline DegeneracyClasses degeneracy_classes(int d) {
  detail::require_cycle(d);
  DegeneracyClasses out;
  out.d = d;
  if (d % 2 == 1) {
    for (int k = 0; k < 2; ++k) {
      for (int j = 0; j < d; ++j) {
        out.classes.push_back({EigenIndex{j, k}});
      }
    }
    return out;
  }
  const int half = d / 2;
  const int t_limit = (d - 2) / 4;
  for (int k = 0; k < 2; ++k) {
    std::vector<bool> used(d, false);
    auto add_pair = [&](int j1, int j2) {
      out.classes.push_back({EigenIndex{j1, k}, EigenIndex{j2, k}});
      used[j1] = used[j2] = true;
    };
    add_pair(0, half);
    for (int t = 1; t <= t_limit; ++t) add_pair(t, half - t);
    for (int t = 1; t <= t_limit; ++t) add_pair(d - t, half + t);
    for (int j = 0; j < d; ++j) {
      if (!used[j]) out.classes.push_back({EigenIndex{j, k}});
    }
  }
  return out;
}

// Limiting (Cesaro) distribution: within each degeneracy class the projected
// amplitudes add coherently, across classes only probabilities add.
//
//   pi(v) = sum_classes sum_s | sum_{a in class} <phi_a|Psi_0><s,v|phi_a> |^2
//
// which is the class-restricted double sum over index pairs, factored.
inline Distribution limiting_distribution_spectral(const WalkState& initial) {
  detail::require_normalized(initial);
  const int d = initial.d;
  const std::vector<Complex> roots = detail::unit_roots(d);
  const DegeneracyClasses deg = degeneracy_classes(d);

  std::vector<double> pi(d, 0.0);
  std::vector<Complex> acc0(d), acc1(d);
  for (const std::vector<EigenIndex>& cls : deg.classes) {
    std::fill(acc0.begin(), acc0.end(), Complex{});
    std::fill(acc1.begin(), acc1.end(), Complex{});
    for (const EigenIndex& idx : cls) {
      const EigenPair p = eigen_pair(idx.j, idx.k, d);
      Complex overlap{};  // <phi|Psi_0>
      for (int v = 0; v < d; ++v) {
        const Complex w = roots[static_cast<std::size_t>(
            (static_cast<long long>(idx.j) * v) % d)];
        overlap += w * (initial.amp(0, v) + std::conj(p.b) * initial.amp(1, v));
      }
      overlap *= p.a;
      const Complex coin0 = overlap * p.a;
      const Complex coin1 = overlap * p.a * p.b;
      for (int v = 0; v < d; ++v) {
        const Complex mode = std::conj(roots[static_cast<std::size_t>(
            (static_cast<long long>(idx.j) * v) % d)]);
        acc0[v] += coin0 * mode;
        acc1[v] += coin1 * mode;
      }
    }
    for (int v = 0; v < d; ++v) {
      pi[v] += std::norm(acc0[v]) + std::norm(acc1[v]);
    }
  }
  return make_distribution(std::move(pi));
}

}  // namespace cyclewalk
