// Acceptance suite: runs the project's verification criteria end to end and
// prints one pass/fail line per criterion.  With no arguments all criteria
// run; `--criterion N` runs a single one.  Exit status is the number of
// failing criteria.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cyclewalk/closed_form.hpp"
#include "cyclewalk/metrics.hpp"
#include "cyclewalk/spectral.hpp"
#include "cyclewalk/states.hpp"
#include "cyclewalk/walk.hpp"

using cyclewalk::Complex;
using cyclewalk::Distribution;
using cyclewalk::WalkState;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

WalkState random_state(int d, std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  WalkState state = cyclewalk::blank_state(d);
  for (Complex& a : state.amplitudes) a = Complex{gauss(rng), gauss(rng)};
  const double n = state.norm();
  for (Complex& a : state.amplitudes) a /= n;
  return state;
}

double max_uniform_dev(const Distribution& p) {
  double worst = 0.0;
  for (double x : p.probs) worst = std::max(worst, std::abs(x - 1.0 / p.d));
  return worst;
}

double max_diff(const Distribution& a, const Distribution& b) {
  double worst = 0.0;
  for (int v = 0; v < a.d; ++v) {
    worst = std::max(worst, std::abs(a.probs[v] - b.probs[v]));
  }
  return worst;
}

// 1. Odd-d uniformity of the spectral limiting distribution.
Result criterion1() {
  std::mt19937 rng(101);
  double worst = 0.0;
  for (int d = 3; d <= 25; d += 2) {
    for (int rep = 0; rep < 3; ++rep) {
      worst = std::max(worst, max_uniform_dev(cyclewalk::limiting_distribution_spectral(
                                  random_state(d, rng))));
    }
  }
  return {worst < 1e-12, "max per-node deviation from 1/d: " + fmt(worst) +
                             " (bound 1e-12)"};
}

// 2. Even cycles of sizes 2 and 4 are uniform, both routes.
Result criterion2() {
  double worst = 0.0;
  for (int d : {2, 4}) {
    for (int v0 = 0; v0 < d; ++v0) {
      worst = std::max(worst, max_uniform_dev(
                                  cyclewalk::limiting_distribution_localized(d, v0)));
      worst = std::max(worst, max_uniform_dev(cyclewalk::limiting_distribution_spectral(
                                  cyclewalk::localized_state(d, v0))));
    }
  }
  return {worst < 1e-12,
          "max deviation from uniform: " + fmt(worst) + " (bound 1e-12)"};
}

// 3. Series, closed-form and spectral routes agree per node.
Result criterion3() {
  double worst = 0.0;
  for (int d = 6; d <= 40; d += 2) {
    for (int v0 = 0; v0 < d; ++v0) {
      const Distribution series =
          cyclewalk::limiting_distribution_localized_series(d, v0);
      const Distribution closed = cyclewalk::limiting_distribution_localized(d, v0);
      const Distribution spectral = cyclewalk::limiting_distribution_spectral(
          cyclewalk::localized_state(d, v0));
      worst = std::max({worst, max_diff(series, closed), max_diff(closed, spectral),
                        max_diff(series, spectral)});
    }
  }
  return {worst < 1e-9, "max pairwise per-node difference over even d in 6..40: " +
                            fmt(worst) + " (bound 1e-9)"};
}

// 4. 1e5-step Cesaro average converges to the closed form.
Result criterion4() {
  std::string detail;
  bool pass = true;
  for (int d : {24, 26}) {
    const double tv_dist = cyclewalk::tv(
        cyclewalk::time_averaged_distribution(cyclewalk::localized_state(d, 5), 100000),
        cyclewalk::limiting_distribution_localized(d, 5));
    pass = pass && tv_dist < 0.01;
    if (!detail.empty()) detail += ", ";
    detail += "d=" + std::to_string(d) + " TV=" + fmt(tv_dist);
  }
  return {pass, detail + " (bound 0.01)"};
}

// 5. Peak vs dip at the opposite node, and equal peaks when d/2 is even.
Result criterion5() {
  const Distribution pi24 = cyclewalk::limiting_distribution_localized(24, 5);
  const Distribution pi26 = cyclewalk::limiting_distribution_localized(26, 5);
  const double bump24 = pi24.probs[(5 + 12) % 24] - 1.0 / 24;
  const double bump26 = pi26.probs[(5 + 13) % 26] - 1.0 / 26;
  const double peak_gap = std::abs(pi24.probs[17] - pi24.probs[5]);
  const bool pass = bump24 > 0.0 && bump26 < 0.0 && peak_gap < 1e-9;
  return {pass, "d=24 opposite-node excess " + fmt(bump24) +
                    " (>0), d=26 excess " + fmt(bump26) + " (<0), d=24 peak gap " +
                    fmt(peak_gap) + " (bound 1e-9)"};
}

// 6. Large-d behaviour at d = 2000, 2001, 2002 with v0 = 0.
Result criterion6() {
  bool pass = true;
  std::string detail;

  const double uni_dev = max_uniform_dev(cyclewalk::limiting_distribution_spectral(
      cyclewalk::localized_state(2001, 0)));
  pass = pass && uni_dev < 1e-12;
  detail += "d=2001 uniform dev " + fmt(uni_dev);

  for (int d : {2000, 2002}) {
    const cyclewalk::ClosedFormContext ctx(d, 0);
    double asym_gap = 0.0, far_field = 0.0;
    for (int v = 0; v < d; ++v) {
      const int delta = ctx.delta(v);
      const int delta_prime = ctx.delta_prime(v);
      const double pi_d = cyclewalk::correction_pi(d, delta);
      asym_gap = std::max(asym_gap, std::abs(pi_d - cyclewalk::asymptotic_correction(
                                                        delta, delta_prime, ctx.xi)));
      if (std::min(delta, delta_prime) > 20) {
        far_field = std::max(far_field, std::abs(pi_d));
      }
    }
    const double peak_dev =
        std::abs(cyclewalk::correction_pi(d, 0) - (std::numbers::sqrt2 - 1.0));
    const bool gap_ok = asym_gap < 8.0 / d;
    const bool far_ok = far_field < 1e-6;
    const bool peak_ok = peak_dev < 0.01;
    pass = pass && gap_ok && far_ok && peak_ok;
    detail += "; d=" + std::to_string(d) + ": |Pi-Pibar| " + fmt(asym_gap) +
              (gap_ok ? " ok" : " FAIL") + " (bound " + fmt(8.0 / d) +
              "), far |Pi| " + fmt(far_field) + (far_ok ? " ok" : " FAIL") +
              " (bound 1e-6), peak dev " + fmt(peak_dev) +
              (peak_ok ? " ok" : " FAIL");
    if (!far_ok) {
      // show the same value through the independent direct series, to make
      // clear the plateau is exact arithmetic, not an implementation artifact
      const int probe = d / 4;
      const double sign = (probe % 2 == 0) ? 1.0 : -1.0;
      const double direct = sign * 4.0 * cyclewalk::series_S_direct(d, probe) / d;
      detail += " [far plateau is the exact -2*xi/d tail; the direct "
                "trigonometric sum at Delta=" + std::to_string(probe) + " gives " +
                fmt(direct) + ", closed form " +
                fmt(cyclewalk::correction_pi(d, probe)) + "]";
    }
  }
  return {pass, detail};
}

// 7. The two-eigenvector superposition has an n-independent, non-uniform
//    node distribution.
Result criterion7() {
  const WalkState fig4 = cyclewalk::eigen_superposition(
      24, {{5, 0, Complex{1.0 / std::numbers::sqrt2, 0.0}},
           {7, 0, Complex{1.0 / std::numbers::sqrt2, 0.0}}});
  const Distribution base = cyclewalk::node_distribution(fig4);
  double worst = 0.0;
  WalkState cur = fig4;
  for (int n = 1; n <= 200; ++n) {
    cur = cyclewalk::step(cur);
    worst = std::max(worst, max_diff(cyclewalk::node_distribution(cur), base));
  }
  const double tv_uniform = cyclewalk::tv_from_uniform(base);
  const bool pass = worst < 1e-12 && tv_uniform > 0.01;
  return {pass, "max drift over 200 steps " + fmt(worst) +
                    " (bound 1e-12), TV from uniform " + fmt(tv_uniform) +
                    " (must exceed 0.01)"};
}

// 8. TV distances of the four-eigenvector superposition; if the d=24
//    identification failed, scan even d in 22..48 and report the match.
Result criterion8() {
  auto measure = [](int d) {
    const WalkState state = cyclewalk::eigen_superposition(
        d, {{3, 0, Complex{0.5, 0.0}},
            {9, 0, Complex{0.5, 0.0}},
            {15, 0, Complex{-0.5, 0.0}},
            {21, 0, Complex{-0.5, 0.0}}});
    const double tv_init =
        cyclewalk::tv_from_uniform(cyclewalk::node_distribution(state));
    const double tv_lim = cyclewalk::tv_from_uniform(
        cyclewalk::limiting_distribution_spectral(state));
    return std::pair<double, double>{tv_init, tv_lim};
  };
  const auto [tv_init, tv_lim] = measure(24);
  if (std::abs(tv_init - 0.046) < 0.002 && std::abs(tv_lim - 0.204) < 0.002) {
    return {true, "d=24: initial TV " + fmt(tv_init) + " (0.046 +/- 0.002), "
                      "limiting TV " + fmt(tv_lim) + " (0.204 +/- 0.002)"};
  }
  std::string scan = "d=24 gives initial " + fmt(tv_init) + ", limiting " +
                     fmt(tv_lim) + "; scan:";
  for (int d = 22; d <= 48; d += 2) {
    const auto [ti, tl] = measure(d);
    if (std::abs(ti - 0.046) < 0.002 && std::abs(tl - 0.204) < 0.002) {
      scan += " d=" + std::to_string(d) + " matches";
      return {false, scan};
    }
  }
  return {false, scan + " no even d in 22..48 matches"};
}

// 9. Analytic eigen system against the step operator, and orthonormality.
Result criterion9() {
  double worst_residual = 0.0;
  double worst_gram = 0.0;
  for (int d = 2; d <= 32; ++d) {
    std::vector<WalkState> basis;
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < 2; ++k) {
        const WalkState phi = cyclewalk::eigenvector_state(j, k, d);
        const Complex c = cyclewalk::eigenvalue(j, k, d);
        const WalkState stepped = cyclewalk::step(phi);
        double res_sq = 0.0;
        for (std::size_t i = 0; i < phi.amplitudes.size(); ++i) {
          res_sq += std::norm(stepped.amplitudes[i] - c * phi.amplitudes[i]);
        }
        worst_residual = std::max(worst_residual, std::sqrt(res_sq));
        basis.push_back(phi);
      }
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i; j < basis.size(); ++j) {
        Complex g{};
        for (std::size_t t = 0; t < basis[i].amplitudes.size(); ++t) {
          g += std::conj(basis[i].amplitudes[t]) * basis[j].amplitudes[t];
        }
        worst_gram = std::max(worst_gram, std::abs(g - (i == j ? 1.0 : 0.0)));
      }
    }
  }
  const bool pass = worst_residual < 1e-10 && worst_gram < 1e-10;
  return {pass, "max |U phi - c phi| = " + fmt(worst_residual) +
                    ", max orthonormality deviation = " + fmt(worst_gram) +
                    " (bounds 1e-10)"};
}

// 10. Property bundle: unitarity, normalization, zero-sum corrections,
//     series resummation identity, the sqrt(2) identity, reflection symmetry.
Result criterion10() {
  std::string detail;
  bool pass = true;
  std::mt19937 rng(110);

  double unit_dev = 0.0;
  for (int d : {2, 3, 5, 8, 16, 32, 64}) {
    unit_dev = std::max(unit_dev,
                        std::abs(cyclewalk::step(random_state(d, rng)).norm() - 1.0));
  }
  pass = pass && unit_dev < 1e-12;
  detail += "unitarity dev " + fmt(unit_dev);

  double norm_dev = 0.0;
  for (int d : {6, 24, 26, 101}) {
    const Distribution pi = cyclewalk::limiting_distribution_localized(d, d / 3);
    double sum = 0.0;
    for (double p : pi.probs) sum += p;
    norm_dev = std::max(norm_dev, std::abs(sum - 1.0));
  }
  pass = pass && norm_dev < 1e-10;
  detail += ", normalization dev " + fmt(norm_dev);

  double pi_sum_dev = 0.0;
  for (int d : {6, 24, 26, 100}) {
    double sum = 0.0;
    for (int v = 0; v < d; ++v) {
      sum += cyclewalk::correction_pi(d, cyclewalk::cycle_distance(d, v, 0));
    }
    pi_sum_dev = std::max(pi_sum_dev, std::abs(sum));
  }
  pass = pass && pi_sum_dev < 1e-9;
  detail += ", sum(Pi) dev " + fmt(pi_sum_dev);

  double series_dev = 0.0;
  for (int d = 6; d <= 200; d += 2) {
    for (int delta = 0; delta <= d / 2; ++delta) {
      series_dev = std::max(series_dev, std::abs(cyclewalk::series_S_direct(d, delta) -
                                                 cyclewalk::series_S_closed(d, delta)));
    }
  }
  pass = pass && series_dev < 1e-10;
  detail += ", S(direct)-S(closed) dev " + fmt(series_dev);

  const double z_identity =
      std::abs(8.0 * cyclewalk::kZ / (1.0 - cyclewalk::kZ * cyclewalk::kZ) -
               std::numbers::sqrt2);
  pass = pass && z_identity < 1e-14;
  detail += ", 8z/(1-z^2)-sqrt2 " + fmt(z_identity);

  double sym_dev = 0.0;
  for (int d : {24, 26}) {
    const Distribution pi = cyclewalk::limiting_distribution_localized(d, 5);
    for (int x = 1; x < d / 2; ++x) {
      sym_dev = std::max(sym_dev, std::abs(pi.probs[(5 + x) % d] -
                                           pi.probs[(5 - x + d) % d]));
    }
  }
  pass = pass && sym_dev < 1e-12;
  detail += ", reflection dev " + fmt(sym_dev);

  return {pass, detail};
}

const char* kDescriptions[10] = {
    "odd-d uniformity of the spectral limiting distribution",
    "uniform limiting distribution on cycles of size 2 and 4",
    "three-route equivalence (series / closed form / spectral)",
    "1e5-step time average converges to the closed form (d=24, 26)",
    "opposite-node peak (d=24) vs dip (d=26), equal peak heights",
    "large-d closed form vs asymptotic profile (d=2000, 2001, 2002)",
    "invariant non-uniform distribution of a degenerate superposition",
    "TV distances 0.046 / 0.204 of the four-eigenvector superposition",
    "analytic eigen system: residuals and orthonormality (d <= 32)",
    "property bundle: unitarity, normalization, series identities, symmetry",
};

Result (*const kCriteria[10])() = {criterion1, criterion2, criterion3, criterion4,
                                   criterion5, criterion6, criterion7, criterion8,
                                   criterion9, criterion10};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[i + 1]);
      ++i;
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 64;
    }
  }
  if (only < 0 || only > 10) {
    std::fprintf(stderr, "criterion must be 1..10\n");
    return 64;
  }

  int failures = 0;
  for (int n = 1; n <= 10; ++n) {
    if (only != 0 && n != only) continue;
    const Result r = kCriteria[n - 1]();
    std::printf("[%s] criterion %d: %s :: %s\n", r.pass ? "PASS" : "FAIL", n,
                kDescriptions[n - 1], r.detail.c_str());
    if (!r.pass) ++failures;
  }
  return failures;
}
