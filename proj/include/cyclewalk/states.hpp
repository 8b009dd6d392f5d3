#pragma once

// Initial-state constructors and the plain-text state file format.
//
// State files: one header line `d=<int>`, then 2d whitespace-separated lines
// `<s> <v> <re> <im>` in composite-index order s*d + v.  Lines starting with
// '#' and blank lines are ignored.

#include <cmath>
#include <complex>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclewalk/spectral.hpp"
#include "cyclewalk/walk.hpp"

namespace cyclewalk {

// Walker at node v0 with the balanced coin (|0> + i|1>)/sqrt(2); this coin
// state spreads symmetrically about v0.
inline WalkState localized_state(int d, int v0) {
  detail::require_cycle(d);
  detail::require_node(d, v0);
  WalkState state = blank_state(d);
  state.amp(0, v0) = Complex{kInvSqrt2, 0.0};
  state.amp(1, v0) = Complex{0.0, kInvSqrt2};
  return state;
}

struct SuperpositionTerm {
  int j = 0;
  int k = 0;
  Complex coefficient{1.0, 0.0};
};

// Linear combination of analytic eigenvectors, renormalized to unit norm.
// The pre-normalization norm is reported through norm_before when given
// (for orthonormal eigenvectors and unit-norm coefficient vectors it is 1).
inline WalkState eigen_superposition(int d, const std::vector<SuperpositionTerm>& terms,
                                     double* norm_before = nullptr) {
  detail::require_cycle(d);
  if (terms.empty()) {
    throw std::invalid_argument("superposition needs at least one term");
  }
  WalkState state = blank_state(d);
  for (const SuperpositionTerm& term : terms) {
    const WalkState phi = eigenvector_state(term.j, term.k, d);
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
      state.amplitudes[i] += term.coefficient * phi.amplitudes[i];
    }
  }
  const double n = state.norm();
  if (norm_before != nullptr) *norm_before = n;
  if (n < 1e-9) {
    throw std::invalid_argument("superposition has zero norm");
  }
  for (Complex& a : state.amplitudes) a /= n;
  return state;
}

inline void save_state(const WalkState& state, std::ostream& os) {
  os << "d=" << state.d << "\n";
  char line[128];
  for (int s = 0; s < 2; ++s) {
    for (int v = 0; v < state.d; ++v) {
      const Complex a = state.amp(s, v);
      std::snprintf(line, sizeof(line), "%d %d %.17g %.17g\n", s, v,
                    a.real(), a.imag());
      os << line;
    }
  }
}

inline void save_state(const WalkState& state, const std::string& path) {
  std::ofstream os(path);
  if (!os) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  save_state(state, os);
  if (!os.good()) {
    throw std::runtime_error("write failed for " + path);
  }
}

inline WalkState load_state(std::istream& is) {
  std::string line;
  int d = -1;
  // header
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("d=", 0) != 0) {
      throw std::invalid_argument("state file must start with a d=<int> header");
    }
    try {
      d = std::stoi(line.substr(2));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad d header: " + line);
    }
    break;
  }
  detail::require_cycle(d);

  WalkState state = blank_state(d);
  std::vector<bool> seen(static_cast<std::size_t>(2) * d, false);
  int entries = 0;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    int s = 0, v = 0;
    double re = 0.0, im = 0.0;
    if (!(ss >> s >> v >> re >> im)) {
      throw std::invalid_argument("malformed state line: " + line);
    }
    std::string extra;
    if (ss >> extra) {
      throw std::invalid_argument("trailing data in state line: " + line);
    }
    if (s != 0 && s != 1) {
      throw std::invalid_argument("coin value out of range in line: " + line);
    }
    if (v < 0 || v >= d) {
      throw std::invalid_argument("node index out of range in line: " + line);
    }
    const std::size_t idx = static_cast<std::size_t>(s) * d + v;
    if (seen[idx]) {
      throw std::invalid_argument("duplicate (s,v) entry in line: " + line);
    }
    seen[idx] = true;
    state.amplitudes[idx] = Complex{re, im};
    ++entries;
  }
  if (entries != 2 * d) {
    throw std::invalid_argument("state file has " + std::to_string(entries) +
                                " entries, expected " + std::to_string(2 * d));
  }
  const double n = state.norm();
  if (n < 1e-9) {
    throw std::invalid_argument("state file has zero norm");
  }
  if (std::abs(n - 1.0) > 1e-6) {
    throw std::invalid_argument("state file norm " + std::to_string(n) +
                                " deviates from 1 beyond 1e-6");
  }
  for (Complex& a : state.amplitudes) a /= n;
  return state;
}

inline WalkState load_state(const std::string& path) {
  std::ifstream is(path);
  if (!is) {
    throw std::invalid_argument("cannot open state file " + path);
  }
  return load_state(is);
}

}  // namespace cyclewalk
