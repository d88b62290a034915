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

#ifndef PRESTIGE_MODEL_HPP_
#define PRESTIGE_MODEL_HPP_

#include <cmath>
#include <span>
#include <string>

#include "prestige/errors.hpp"
#include "prestige/loss.hpp"
#include "prestige/types.hpp"

namespace prestige {

// f_i(w) = (lambda / 2) |w|^2 + l(y_i (<w, x_i> + b)), w restricted to the
// Euclidean ball of `radius`.
struct RegularizedObjective {
  double lambda = 1.0;
  LossSpec loss;
  double radius = 1.0;

  void validate() const {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
      throw ConfigError("lambda must be >= 0");
    }
    if (!(radius > 0.0) || !std::isfinite(radius)) {
      throw ConfigError("radius must be > 0");
    }
    loss.validate();
  }
};

// <w, x> + b
inline double margin(const ModelState& model, std::span<const Feature> x) {
  double sum = model.bias;
  const std::size_t d = model.weights.size();
  for (const Feature& f : x) {
    if (f.index >= d) {
      throw DimensionMismatch("feature index " + std::to_string(f.index) +
                              " >= model dimension " + std::to_string(d));
    }
    sum += model.weights[f.index] * f.value;
  }
  return sum;
}

// z = y * (<w, x> + b). Large z means the example agrees with the model.
inline double curriculum_value(const ModelState& model,
                               std::span<const Feature> x, int label) {
  if (!is_binary_label(label)) throw InputError("label must be -1 or +1");
  return static_cast<double>(label) * margin(model, x);
}

// Ties go to +1.
inline int predict(const ModelState& model, std::span<const Feature> x) {
  return margin(model, x) >= 0.0 ? 1 : -1;
}

// Adds l'(z) * y * x into `out` without touching other coordinates.
inline void add_loss_gradient(const LossSpec& loss, const ModelState& model,
                              std::span<const Feature> x, int label,
                              double weight, std::span<double> out) {
  const double z = curriculum_value(model, x, label);
  const double factor = weight * loss_subgradient(loss, z) * label;
  if (factor == 0.0) return;
  for (const Feature& f : x) out[f.index] += factor * f.value;
}

// g = lambda * w + l'(z) * y * x
inline Vector full_gradient(const RegularizedObjective& objective,
                            const ModelState& model,
                            std::span<const Feature> x, int label) {
  Vector g(model.weights.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] = objective.lambda * model.weights[i];
  }
  add_loss_gradient(objective.loss, model, x, label, 1.0, g);
  return g;
}

inline Vector project_ball(Vector w, double radius) {
  if (!(radius > 0.0)) throw ConfigError("ball radius must be > 0");
  const double n = norm2(w);
  if (n <= radius) return w;
  // Rounding can leave the rescaled norm one ulp above the radius.
  const Vector original = w;
  double factor = radius / n;
  for (;;) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = original[i] * factor;
    if (norm2(w) <= radius) return w;
    factor = std::nextafter(factor, 0.0);
  }
}

}  // namespace prestige

#endif  // PRESTIGE_MODEL_HPP_
