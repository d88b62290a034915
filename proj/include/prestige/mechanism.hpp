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

#ifndef PRESTIGE_MECHANISM_HPP_
#define PRESTIGE_MECHANISM_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string_view>

#include "prestige/errors.hpp"
#include "prestige/random.hpp"
#include "prestige/types.hpp"

// Local differential privacy primitives: randomized response on labels and
// private sampling of gradients (sign-randomized rescale to norm L, then a
// uniform draw of norm B from the hemisphere selected by a biased coin).

namespace prestige {

// How the norm B of a privatized gradient is chosen.
//
// kLiteral uses
//   B = L sqrt(pi) (e^eps + 1)/(e^eps - 1) d Gamma((d-1)/2 + 1) / Gamma(d/2 + 1)
// which yields E[G | g] = 2g. kUnbiased halves it so that E[G | g] = g.
enum class BoundConvention { kUnbiased, kLiteral };

inline std::string_view to_string(BoundConvention c) {
  return c == BoundConvention::kUnbiased ? "unbiased" : "literal";
}

inline std::optional<BoundConvention> parse_bound_convention(
    std::string_view name) {
  if (name == "unbiased") return BoundConvention::kUnbiased;
  if (name == "literal") return BoundConvention::kLiteral;
  return std::nullopt;
}

struct PrivacySpec {
  double eps_r = 0.2;     // randomized response budget
  double eps_s = 0.8;     // private sampling budget
  double lipschitz = 1.0;
  BoundConvention convention = BoundConvention::kUnbiased;

  double total() const { return eps_r + eps_s; }

  void validate() const {
    if (!(eps_r >= 0.0)) throw ConfigError("eps_r must be >= 0");
    if (!(eps_s > 0.0) || !std::isfinite(eps_s)) {
      throw ConfigError("eps_s must be finite and > 0");
    }
    if (!(lipschitz > 0.0) || !std::isfinite(lipschitz)) {
      throw ConfigError("lipschitz constant must be > 0");
    }
  }
};

// Probability that randomized response reports the other label,
// rho_+ = rho_- = 1 / (e^eps_r + 1).
inline double flip_probability(double eps_r) {
  if (!(eps_r >= 0.0)) throw ConfigError("eps_r must be >= 0");
  return 1.0 / (std::exp(eps_r) + 1.0);
}

// e^eps / (e^eps + 1), written to stay finite for large eps.
inline double keep_probability(double eps) { return 1.0 / (1.0 + std::exp(-eps)); }

// Warner design matrix. Row = true label (+1, -1), column = reported label.
using DesignMatrix = std::array<std::array<double, 2>, 2>;

inline DesignMatrix design_matrix(double eps_r) {
  const double flip = flip_probability(eps_r);
  return {{{1.0 - flip, flip}, {flip, 1.0 - flip}}};
}

template <RandomSource R>
int randomized_response(int label, double eps_r, R& rng) {
  if (!is_binary_label(label)) throw InputError("label must be -1 or +1");
  return bernoulli(rng, flip_probability(eps_r)) ? -label : label;
}

// Mean of <u, e> for u uniform on the unit hemisphere {<u, e> > 0} in R^d:
// Gamma(d/2) / (sqrt(pi) Gamma((d+1)/2)).
inline double hemisphere_mean(std::size_t d) {
  if (d == 0) throw ConfigError("dimension must be >= 1");
  const double half = 0.5 * static_cast<double>(d);
  return std::exp(std::lgamma(half) - std::lgamma(half + 0.5)) /
         std::sqrt(std::numbers::pi);
}

inline double scalar_bound(double lipschitz, std::size_t d, double eps_s,
                           BoundConvention convention) {
  if (d == 0) throw ConfigError("dimension must be >= 1");
  if (eps_s == 0.0) throw ConfigError("scalar bound diverges at eps_s = 0");
  if (!(eps_s > 0.0)) throw ConfigError("eps_s must be > 0");
  if (!(lipschitz > 0.0)) throw ConfigError("lipschitz constant must be > 0");
  const double dd = static_cast<double>(d);
  const double log_gamma_ratio =
      std::lgamma((dd - 1.0) / 2.0 + 1.0) - std::lgamma(dd / 2.0 + 1.0);
  const double coth = (std::exp(eps_s) + 1.0) / std::expm1(eps_s);
  const double literal = lipschitz * std::sqrt(std::numbers::pi) * coth * dd *
                         std::exp(log_gamma_ratio);
  return convention == BoundConvention::kUnbiased ? 0.5 * literal : literal;
}

inline double scalar_bound(const PrivacySpec& spec, std::size_t d) {
  return scalar_bound(spec.lipschitz, d, spec.eps_s, spec.convention);
}

// Uniform direction on the unit sphere.
template <RandomSource R>
Vector sample_sphere(std::size_t d, R& rng) {
  Vector u(d);
  for (;;) {
    for (double& v : u) v = rng.gaussian();
    const double n = norm2(u);
    if (n > 0.0) {
      scale(u, 1.0 / n);
      return u;
    }
  }
}

// Uniform unit vector on the open hemisphere {<u, direction> > 0}.
template <RandomSource R>
Vector sample_hemisphere(std::span<const double> direction, R& rng) {
  const std::size_t d = direction.size();
  if (d == 0 || norm2(direction) == 0.0) {
    throw InputError("hemisphere direction must be non-zero");
  }
  Vector u(d);
  for (;;) {
    for (double& v : u) v = rng.gaussian();
    const double n = norm2(u);
    const double side = dot(u, direction);
    if (n == 0.0 || side == 0.0) continue;
    const double signed_norm = side > 0.0 ? n : -n;
    for (double& v : u) v /= signed_norm;
    return u;
  }
}

// Returns +L g/|g| with probability 1/2 + |g|/(2L), otherwise -L g/|g|, so the
// result is an unbiased norm-L estimate of g. Gradients longer than L are
// treated as clipped to L. g = 0 yields a uniformly random direction.
template <RandomSource R>
Vector rescale_gradient(std::span<const double> g, double lipschitz, R& rng) {
  if (!(lipschitz > 0.0)) throw ConfigError("lipschitz constant must be > 0");
  const double n = norm2(g);
  if (n == 0.0) {
    Vector u = sample_sphere(g.size(), rng);
    scale(u, lipschitz);
    return u;
  }
  const double keep = std::min(1.0, 0.5 + n / (2.0 * lipschitz));
  const double sign = bernoulli(rng, keep) ? 1.0 : -1.0;
  Vector out(g.begin(), g.end());
  scale(out, sign * lipschitz / n);
  return out;
}

// Scales g down to norm `limit` when it is longer.
inline Vector clip_to_norm(std::span<const double> g, double limit) {
  Vector out(g.begin(), g.end());
  const double n = norm2(out);
  if (n > limit) scale(out, limit / n);
  return out;
}

// Private sampling with B cached for a fixed dimension.
class GradientPrivatizer {
 public:
  GradientPrivatizer(const PrivacySpec& spec, std::size_t dimension)
      : spec_(spec), dimension_(dimension) {
    spec_.validate();
    bound_ = scalar_bound(spec_, dimension_);
    keep_ = keep_probability(spec_.eps_s);
  }

  double bound() const { return bound_; }
  const PrivacySpec& spec() const { return spec_; }

  template <RandomSource R>
  Vector operator()(std::span<const double> g, R& rng) const {
    if (g.size() != dimension_) {
      throw DimensionMismatch("gradient has wrong dimension");
    }
    for (double v : g) {
      if (!std::isfinite(v)) throw InputError("gradient must be finite");
    }
    const Vector clipped = clip_to_norm(g, spec_.lipschitz);
    Vector direction = rescale_gradient(clipped, spec_.lipschitz, rng);
    if (!bernoulli(rng, keep_)) scale(direction, -1.0);
    Vector out = sample_hemisphere(direction, rng);
    scale(out, bound_);
    return out;
  }

 private:
  PrivacySpec spec_;
  std::size_t dimension_;
  double bound_ = 0.0;
  double keep_ = 0.0;
};

template <RandomSource R>
Vector privatize_gradient(std::span<const double> g, const PrivacySpec& spec,
                          R& rng) {
  return GradientPrivatizer(spec, g.size())(g, rng);
}

// Pr(G on the same side as g), k = |g| / (2L).
inline double channel_probability(double k, double eps_s) {
  if (!(k >= 0.0 && k <= 0.5)) throw InputError("k must lie in [0, 0.5]");
  const double keep = keep_probability(eps_s);
  return (0.5 + k) * keep + (0.5 - k) * (1.0 - keep);
}

// Pr(G on the side of g) when the input was -g.
inline double cross_channel_probability(double k, double eps_s) {
  if (!(k >= 0.0 && k <= 0.5)) throw InputError("k must lie in [0, 0.5]");
  const double keep = keep_probability(eps_s);
  return (0.5 - k) * keep + (0.5 + k) * (1.0 - keep);
}

// Sequential composition.
inline double compose_budget(double eps_r, double eps_s) {
  if (!(eps_r >= 0.0) || !(eps_s >= 0.0)) {
    throw ConfigError("privacy budgets must be >= 0");
  }
  return eps_r + eps_s;
}

}  // namespace prestige

#endif  // PRESTIGE_MECHANISM_HPP_
