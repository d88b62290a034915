//
// Copyright 2026 The Prestige Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef PRESTIGE_VERIFY_HPP_
#define PRESTIGE_VERIFY_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "prestige/errors.hpp"
#include "prestige/experiment.hpp"
#include "prestige/mechanism.hpp"
#include "prestige/random.hpp"
#include "prestige/types.hpp"

// Monte-Carlo checks of every randomization primitive against its analytic
// law. Each check draws from its own stream seeded with seed + check index.

namespace prestige {

struct CheckRow {
  std::string name;
  double empirical = 0.0;
  double expected = 0.0;
  double statistic = 0.0;  // compared against limit
  double limit = 0.0;
  bool passed = false;
};

struct MechanismReport {
  std::vector<CheckRow> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckRow& c) { return c.passed; });
  }
};

// Unit vector along (1, 2, ..., d), a fixed direction with no special axis.
inline Vector reference_direction(std::size_t d) {
  Vector e(d);
  for (std::size_t i = 0; i < d; ++i) e[i] = static_cast<double>(i + 1);
  scale(e, 1.0 / norm2(e));
  return e;
}

struct MeanEstimate {
  Vector mean;
  Vector standard_error;
};

// Component-wise mean and standard error of `draws` privatized copies of g.
template <RandomSource R>
MeanEstimate privatized_mean(const Vector& g, const PrivacySpec& spec,
                             std::size_t draws, R& rng) {
  const GradientPrivatizer privatize(spec, g.size());
  std::vector<RunningStats> stats(g.size());
  for (std::size_t n = 0; n < draws; ++n) {
    const Vector out = privatize(g, rng);
    for (std::size_t i = 0; i < g.size(); ++i) stats[i].add(out[i]);
  }
  MeanEstimate est;
  for (const RunningStats& s : stats) {
    est.mean.push_back(s.mean());
    est.standard_error.push_back(s.stddev() /
                                 std::sqrt(static_cast<double>(draws)));
  }
  return est;
}

// max_i |mean_i - g_i| / se_i
inline double max_z_score(const MeanEstimate& est, const Vector& g) {
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double se = est.standard_error[i];
    const double diff = std::abs(est.mean[i] - g[i]);
    worst = std::max(worst, se > 0.0 ? diff / se : (diff > 0.0 ? INFINITY : 0.0));
  }
  return worst;
}

// Fraction of draws with <G, reference> > 0 for input g.
template <RandomSource R>
double same_side_rate(const Vector& g, const Vector& reference,
                      const PrivacySpec& spec, std::size_t draws, R& rng) {
  const GradientPrivatizer privatize(spec, g.size());
  std::size_t hits = 0;
  for (std::size_t n = 0; n < draws; ++n) {
    hits += dot(privatize(g, rng), reference) > 0.0;
  }
  return static_cast<double>(hits) / static_cast<double>(draws);
}

inline double binomial_sigma(double p, std::size_t n) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

inline MechanismReport verify_mechanisms(std::size_t sample_count,
                                         std::uint64_t seed,
                                         BoundConvention convention) {
  if (sample_count < 10000) throw ConfigError("sample count must be >= 10000");
  MechanismReport report;
  std::uint64_t stream = seed;
  const auto add = [&](std::string name, double empirical, double expected,
                       double statistic, double limit) {
    report.checks.push_back(CheckRow{std::move(name), empirical, expected,
                                     statistic, limit, statistic <= limit});
  };

  // E[G | g] = g, |g| = 0.7 L, eps_s = 0.8. empirical is <mean, g> / |g|^2.
  for (std::size_t d : {1, 2, 3, 5, 10}) {
    PrivacySpec spec{0.0, 0.8, 1.0, convention};
    Vector g = reference_direction(d);
    scale(g, 0.7 * spec.lipschitz);
    Rng rng(stream++);
    const MeanEstimate est = privatized_mean(g, spec, sample_count, rng);
    add("unbiasedness d=" + std::to_string(d), dot(est.mean, g) / dot(g, g),
        1.0, max_z_score(est, g), 3.0);
  }

  for (double eps_r : {0.2, std::log(3.0), 2.0}) {
    Rng rng(stream++);
    std::size_t flips = 0;
    for (std::size_t n = 0; n < sample_count; ++n) {
      flips += randomized_response(1, eps_r, rng) == -1;
    }
    const double rate = static_cast<double>(flips) / static_cast<double>(sample_count);
    const double p = flip_probability(eps_r);
    add("flip rate eps_r=" + format_number(eps_r), rate, p,
        std::abs(rate - p) / binomial_sigma(p, sample_count), 4.0);
    const DesignMatrix m = design_matrix(eps_r);
    const double worst = std::max({m[0][0] / m[1][0], m[1][1] / m[0][1],
                                   m[1][0] / m[0][0], m[0][1] / m[1][1]});
    add("response likelihood ratio eps_r=" + format_number(eps_r), worst,
        std::exp(eps_r), worst / std::exp(eps_r), 1.0 + 1e-12);
  }

  // Sign channel in d = 3: same side (input g) and cross side (input -g).
  for (double eps_s : {0.5, std::log(3.0)}) {
    const PrivacySpec spec{0.0, eps_s, 1.0, convention};
    const Vector reference = reference_direction(3);
    double max_ratio = 0.0;
    for (double k : {0.0, 0.25, 0.5}) {
      Vector g = reference;
      scale(g, 2.0 * k * spec.lipschitz);
      Vector minus_g = g;
      scale(minus_g, -1.0);
      Rng rng(stream++);
      const double same = same_side_rate(g, reference, spec, sample_count, rng);
      const double cross = same_side_rate(minus_g, reference, spec, sample_count, rng);
      const double p_same = channel_probability(k, eps_s);
      const double p_cross = cross_channel_probability(k, eps_s);
      const std::string tag = " k=" + format_number(k) + " eps_s=" + format_number(eps_s);
      add("same-side rate" + tag, same, p_same,
          std::abs(same - p_same) / binomial_sigma(p_same, sample_count), 4.0);
      add("cross-side rate" + tag, cross, p_cross,
          std::abs(cross - p_cross) / binomial_sigma(p_cross, sample_count), 4.0);
      const double ratio = same / cross;
      max_ratio = std::max(max_ratio, ratio);
      if (k == 0.5) {
        add("channel ratio" + tag, ratio, std::exp(eps_s),
            std::abs(ratio / std::exp(eps_s) - 1.0), 0.05);
      }
    }
    add("ldp sign ratio eps_s=" + format_number(eps_s), max_ratio,
        std::exp(eps_s), max_ratio / std::exp(eps_s), 1.05);
  }

  {
    Rng rng(stream++);
    double worst = 0.0;
    const std::size_t draws = std::min<std::size_t>(sample_count, 10000);
    for (std::size_t n = 0; n < draws; ++n) {
      const std::size_t d = 1 + rng.index(50);
      const PrivacySpec spec{0.0, 0.05 + 0.95 * rng.uniform(),
                             0.1 + 5.0 * rng.uniform(), convention};
      Vector g(d);
      for (double& v : g) v = 3.0 * rng.gaussian();
      const GradientPrivatizer privatize(spec, d);
      const double rel = std::abs(norm2(privatize(g, rng)) / privatize.bound() - 1.0);
      worst = std::max(worst, rel);
    }
    add("norm exactness", worst, 0.0, worst, 1e-9);
  }

  for (std::size_t d : {2, 3}) {
    Rng rng(stream++);
    const Vector direction = reference_direction(d);
    RunningStats along;
    for (std::size_t n = 0; n < sample_count; ++n) {
      along.add(dot(sample_hemisphere(direction, rng), direction));
    }
    const double expected = hemisphere_mean(d);
    const double se = along.stddev() / std::sqrt(static_cast<double>(sample_count));
    add("hemisphere mean d=" + std::to_string(d), along.mean(), expected,
        std::abs(along.mean() - expected) / se, 3.0);
  }
  return report;
}

inline void write_report(std::ostream& out, const MechanismReport& report) {
  out << "check,empirical,expected,statistic,limit,status\n";
  for (const CheckRow& c : report.checks) {
    out << c.name << ',' << format_number(c.empirical) << ','
        << format_number(c.expected) << ',' << format_number(c.statistic) << ','
        << format_number(c.limit) << ',' << (c.passed ? "pass" : "FAIL") << '\n';
  }
  if (!out) throw IoError("report write failure");
}

inline void write_report(const std::string& path, const MechanismReport& report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_report(out, report);
}

}  // namespace prestige

#endif  // PRESTIGE_VERIFY_HPP_
