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

#ifndef PRESTIGE_LOSS_HPP_
#define PRESTIGE_LOSS_HPP_

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "prestige/errors.hpp"

namespace prestige {

// Margin losses l(z) of z = y * (<w, x> + b).
//
//   hinge     max(0, 1 - z)                    convex, non-smooth
//   logistic  ln(1 + e^{-z})                   convex, smooth
//   gompertz  1 - exp(-c * e^{-z})             non-convex, smooth, bounded by 1
//   ramp      min(1 - s, max(0, 1 - z))        non-convex, non-smooth, capped
//
// Subgradients return 0 at every kink so that a margin-1 point with the right
// label causes no update.
enum class LossFamily { kHinge, kLogistic, kGompertz, kRamp };

inline std::string_view to_string(LossFamily family) {
  switch (family) {
    case LossFamily::kHinge:
      return "hinge";
    case LossFamily::kLogistic:
      return "logistic";
    case LossFamily::kGompertz:
      return "gompertz";
    case LossFamily::kRamp:
      return "ramp";
  }
  return "unknown";
}

inline std::optional<LossFamily> parse_loss_family(std::string_view name) {
  if (name == "hinge") return LossFamily::kHinge;
  if (name == "logistic") return LossFamily::kLogistic;
  if (name == "gompertz") return LossFamily::kGompertz;
  if (name == "ramp") return LossFamily::kRamp;
  return std::nullopt;
}

struct LossSpec {
  LossFamily family = LossFamily::kHinge;
  double gompertz_c = 2.0;
  double ramp_s = -1.0;

  void validate() const {
    if (!(gompertz_c > 0.0) || !std::isfinite(gompertz_c)) {
      throw ConfigError("gompertz c must be > 0");
    }
    if (!(ramp_s >= -2.0 && ramp_s <= 0.0)) {
      throw ConfigError("ramp s must lie in [-2, 0]");
    }
  }
};

namespace internal {

inline void require_finite_margin(double z) {
  if (!std::isfinite(z)) throw InputError("margin must be finite");
}

}  // namespace internal

inline double loss_value(const LossSpec& spec, double z) {
  internal::require_finite_margin(z);
  switch (spec.family) {
    case LossFamily::kHinge:
      return std::max(0.0, 1.0 - z);
    case LossFamily::kLogistic:
      return z > 0.0 ? std::log1p(std::exp(-z)) : -z + std::log1p(std::exp(z));
    case LossFamily::kGompertz:
      return -std::expm1(-spec.gompertz_c * std::exp(-z));
    case LossFamily::kRamp:
      return std::min(1.0 - spec.ramp_s, std::max(0.0, 1.0 - z));
  }
  return 0.0;
}

// dl/dz; the gradient with respect to w is this times y * x.
inline double loss_subgradient(const LossSpec& spec, double z) {
  internal::require_finite_margin(z);
  switch (spec.family) {
    case LossFamily::kHinge:
      return z < 1.0 ? -1.0 : 0.0;
    case LossFamily::kLogistic: {
      if (z > 0.0) {
        const double e = std::exp(-z);
        return -e / (1.0 + e);
      }
      return -1.0 / (1.0 + std::exp(z));
    }
    case LossFamily::kGompertz: {
      const double u = spec.gompertz_c * std::exp(-z);
      if (std::isinf(u)) return 0.0;
      return -u * std::exp(-u);
    }
    case LossFamily::kRamp:
      return (z > spec.ramp_s && z < 1.0) ? -1.0 : 0.0;
  }
  return 0.0;
}

// sup_z |dl/dz|, used to bound the per-example gradient norm.
inline double max_abs_subgradient(const LossSpec& spec) {
  if (spec.family == LossFamily::kGompertz) return 1.0 / std::exp(1.0);
  return 1.0;
}

}  // namespace prestige

#endif  // PRESTIGE_LOSS_HPP_
