#pragma once

// Plot-ready output tables and their parsers.
//
// Distribution CSV: optional '#' comment lines, a `v,p` header, one row per
// node with probabilities at 12 significant digits.  Comparison CSV adds a
// second route column, per-node absolute differences and a trailing summary
// comment.  JSON carries d, the probs array and caller-supplied metadata.

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyclewalk/closed_form.hpp"
#include "cyclewalk/metrics.hpp"
#include "cyclewalk/spectral.hpp"
#include "cyclewalk/walk.hpp"

namespace cyclewalk {

inline std::string format_g12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

inline void emit_distribution_csv(const Distribution& dist, std::ostream& os,
                                  const std::vector<std::string>& comments = {}) {
  for (const std::string& c : comments) os << "# " << c << "\n";
  os << "v,p\n";
  for (int v = 0; v < dist.d; ++v) {
    os << v << "," << format_g12(dist.probs[v]) << "\n";
  }
}

inline Distribution parse_distribution_csv(std::istream& is) {
  std::string line;
  bool header_seen = false;
  std::vector<double> probs;
  long expected_v = 0;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line.rfind("v,p", 0) != 0) {
        throw std::invalid_argument("distribution CSV must start with a v,p header");
      }
      header_seen = true;
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("malformed CSV row: " + line);
    }
    long v = 0;
    double p = 0.0;
    try {
      v = std::stol(line.substr(0, comma));
      p = std::stod(line.substr(comma + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed CSV row: " + line);
    }
    if (v != expected_v) {
      throw std::invalid_argument("CSV rows must list nodes 0..d-1 in order");
    }
    ++expected_v;
    probs.push_back(p);
  }
  if (!header_seen) {
    throw std::invalid_argument("distribution CSV is empty");
  }
  return make_distribution(std::move(probs));
}

inline nlohmann::json distribution_to_json(const Distribution& dist) {
  nlohmann::json j;
  j["d"] = dist.d;
  j["probs"] = dist.probs;
  return j;
}

inline Distribution distribution_from_json(const nlohmann::json& j) {
  return make_distribution(j.at("probs").get<std::vector<double>>());
}

struct ComparisonSummary {
  double max_abs_diff = 0.0;
  double tv_distance = 0.0;
};

inline ComparisonSummary emit_comparison_csv(const Distribution& p1,
                                             const Distribution& p2,
                                             const std::string& name1,
                                             const std::string& name2,
                                             std::ostream& os,
                                             const std::vector<std::string>& comments = {}) {
  if (p1.d != p2.d) {
    throw std::invalid_argument("comparison needs equal-length distributions");
  }
  for (const std::string& c : comments) os << "# " << c << "\n";
  os << "v,p_" << name1 << ",p_" << name2 << ",abs_diff\n";
  ComparisonSummary summary;
  for (int v = 0; v < p1.d; ++v) {
    const double diff = std::abs(p1.probs[v] - p2.probs[v]);
    if (diff > summary.max_abs_diff) summary.max_abs_diff = diff;
    os << v << "," << format_g12(p1.probs[v]) << "," << format_g12(p2.probs[v])
       << "," << format_g12(diff) << "\n";
  }
  summary.tv_distance = tv(p1, p2);
  os << "# max_abs_diff=" << format_g12(summary.max_abs_diff)
     << " tv=" << format_g12(summary.tv_distance) << "\n";
  return summary;
}

// Eigen system table: one row per (j, k) with the class it belongs to.
inline void emit_spectrum_csv(int d, std::ostream& os) {
  const DegeneracyClasses deg = degeneracy_classes(d);
  std::vector<int> class_of(static_cast<std::size_t>(2) * d, -1);
  for (std::size_t id = 0; id < deg.classes.size(); ++id) {
    for (const EigenIndex& idx : deg.classes[id]) {
      class_of[static_cast<std::size_t>(idx.k) * d + idx.j] = static_cast<int>(id);
    }
  }
  os << "j,k,re(c),im(c),re(b),im(b),a,class_id\n";
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < 2; ++k) {
      const EigenPair p = eigen_pair(j, k, d);
      os << j << "," << k << "," << format_g12(p.eigenvalue.real()) << ","
         << format_g12(p.eigenvalue.imag()) << "," << format_g12(p.b.real())
         << "," << format_g12(p.b.imag()) << "," << format_g12(p.a) << ","
         << class_of[static_cast<std::size_t>(k) * d + j] << "\n";
    }
  }
}

// Per-node closed-form table for a localized start.
inline void emit_closed_form_csv(int d, int v0, std::ostream& os,
                                 const std::vector<std::string>& comments = {}) {
  const Distribution pi = limiting_distribution_localized(d, v0);
  for (const std::string& c : comments) os << "# " << c << "\n";
  os << "v,delta,delta_prime,pi,correction,asymptotic_correction\n";
  if (d % 2 == 1 || d == 2 || d == 4) {
    // uniform cases: the correction vanishes and no asymptotic profile applies
    for (int v = 0; v < d; ++v) {
      const int delta = cycle_distance(d, v, v0);
      os << v << "," << delta << "," << (d % 2 == 0 ? std::to_string(d / 2 - delta) : "")
         << "," << format_g12(pi.probs[v]) << ",0,\n";
    }
    return;
  }
  const ClosedFormContext ctx(d, v0);
  for (int v = 0; v < d; ++v) {
    const int delta = ctx.delta(v);
    const int delta_prime = ctx.delta_prime(v);
    os << v << "," << delta << "," << delta_prime << ","
       << format_g12(pi.probs[v]) << "," << format_g12(correction_pi(d, delta))
       << "," << format_g12(asymptotic_correction(delta, delta_prime, ctx.xi))
       << "\n";
  }
}

}  // namespace cyclewalk
