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

#ifndef PRESTIGE_TYPES_HPP_
#define PRESTIGE_TYPES_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "prestige/errors.hpp"

namespace prestige {

using Vector = std::vector<double>;

struct Feature {
  std::uint32_t index = 0;  // 0-based coordinate
  double value = 0.0;

  friend bool operator==(const Feature&, const Feature&) = default;
};

// One sparse feature vector with its binary label.
struct Example {
  std::vector<Feature> features;  // strictly increasing indices
  int label = 1;                  // -1 or +1

  friend bool operator==(const Example&, const Example&) = default;
};

inline bool is_binary_label(int label) { return label == 1 || label == -1; }

struct Dataset {
  std::vector<Example> examples;
  std::size_t dimension = 0;

  std::size_t size() const { return examples.size(); }
  bool empty() const { return examples.empty(); }

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

// Throws InputError / DimensionMismatch when an invariant of Example is broken.
inline void validate(const Example& example, std::size_t dimension) {
  if (!is_binary_label(example.label)) {
    throw InputError("label must be -1 or +1, got " +
                     std::to_string(example.label));
  }
  for (std::size_t k = 0; k < example.features.size(); ++k) {
    const Feature& f = example.features[k];
    if (f.index >= dimension) {
      throw DimensionMismatch("feature index " + std::to_string(f.index) +
                              " >= dimension " + std::to_string(dimension));
    }
    if (k > 0 && f.index <= example.features[k - 1].index) {
      throw InputError("feature indices must be strictly increasing");
    }
    if (!std::isfinite(f.value)) throw InputError("non-finite feature value");
  }
}

inline void validate(const Dataset& data) {
  if (data.dimension == 0) throw ConfigError("dataset dimension must be >= 1");
  for (const Example& e : data.examples) validate(e, data.dimension);
}

inline std::size_t count_label(const Dataset& data, int label) {
  std::size_t count = 0;
  for (const Example& e : data.examples) count += (e.label == label);
  return count;
}

// Linear model C_w(x) = <w, x> + b. `updates` counts applied private updates.
struct ModelState {
  Vector weights;
  double bias = 0.0;
  std::uint64_t updates = 0;

  explicit ModelState(std::size_t dimension = 0, double bias_value = 0.0)
      : weights(dimension, 0.0), bias(bias_value) {}

  std::size_t dimension() const { return weights.size(); }
};

// Small dense helpers.

inline double dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

inline double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline double sparse_norm2(std::span<const Feature> x) {
  double sum = 0.0;
  for (const Feature& f : x) sum += f.value * f.value;
  return std::sqrt(sum);
}

// y += alpha * x
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline void scale(std::span<double> x, double alpha) {
  for (double& v : x) v *= alpha;
}

}  // namespace prestige

#endif  // PRESTIGE_TYPES_HPP_
