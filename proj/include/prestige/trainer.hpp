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

#ifndef PRESTIGE_TRAINER_HPP_
#define PRESTIGE_TRAINER_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prestige/errors.hpp"
#include "prestige/mechanism.hpp"
#include "prestige/model.hpp"
#include "prestige/random.hpp"
#include "prestige/types.hpp"

namespace prestige {

enum class Method { kSgd, kDjw, kPrestige };

inline std::string_view to_string(Method method) {
  switch (method) {
    case Method::kSgd:
      return "sgd";
    case Method::kDjw:
      return "djw";
    case Method::kPrestige:
      return "prestige";
  }
  return "unknown";
}

inline std::optional<Method> parse_method(std::string_view name) {
  if (name == "sgd") return Method::kSgd;
  if (name == "djw") return Method::kDjw;
  if (name == "prestige") return Method::kPrestige;
  return std::nullopt;
}

struct TrainConfig {
  Method method = Method::kPrestige;
  RegularizedObjective objective;
  PrivacySpec privacy;  // ignored by sgd; djw ignores eps_r
  int epochs = 10;
  std::size_t batch_size = 1;
  double threshold_init = 1.5;
  double step_mu = 1.0;
  std::uint64_t seed = 0;
  bool project = true;
  double bias = 0.0;        // fixed, never trained
  double init_scale = 0.01;  // std of the random initial weights

  void validate() const {
    objective.validate();
    if (method != Method::kSgd) privacy.validate();
    if (epochs < 1) throw ConfigError("epochs must be >= 1");
    if (batch_size < 1) throw ConfigError("batch size must be >= 1");
    if (method == Method::kPrestige && !(threshold_init > 1.0)) {
      throw ConfigError("initial threshold must be > 1");
    }
    if (!(step_mu >= 0.0)) throw ConfigError("mu must be >= 0");
    if (!std::isfinite(bias)) throw ConfigError("bias must be finite");
    if (!(init_scale >= 0.0)) throw ConfigError("init scale must be >= 0");
    if (method != Method::kSgd && !(objective.lambda > 0.0)) {
      throw ConfigError("private methods need lambda > 0 for the step schedule");
    }
  }
};

struct EpochRecord {
  int epoch = 0;              // T, 1-based
  std::uint64_t updates = 0;  // cumulative t at the end of the epoch
  double threshold = 0.0;     // D_th in force during the epoch (NaN: no gate)
  double train_error = 0.0;
  double test_error = std::numeric_limits<double>::quiet_NaN();
};

struct RunRecord {
  std::vector<EpochRecord> epochs;
  Vector final_weights;
  double initial_test_error = std::numeric_limits<double>::quiet_NaN();
  double budget_spent = 0.0;  // per example, composed over all epochs
};

struct TrainResult {
  ModelState model;
  RunRecord record;
};

// D_th after T epochs: init - mu * sum_{k=1..T} sqrt(k).
inline double threshold_after_epoch(double init, double mu, int epochs) {
  double threshold = init;
  for (int k = 1; k <= epochs; ++k) threshold -= mu * std::sqrt(k);
  return threshold;
}

// eta_t = R / (lambda * scale * sqrt(t)); scale is B for private methods.
inline double learning_rate(std::uint64_t t, double radius, double lambda,
                            double scale) {
  if (t < 1) throw ConfigError("update counter must be >= 1");
  if (!(lambda > 0.0)) throw ConfigError("learning rate needs lambda > 0");
  if (!(scale > 0.0)) throw ConfigError("learning rate needs a positive scale");
  return radius / (lambda * scale * std::sqrt(static_cast<double>(t)));
}

inline double evaluate(const ModelState& model, const Dataset& data) {
  if (data.empty()) throw InputError("cannot evaluate on an empty dataset");
  std::size_t wrong = 0;
  for (const Example& e : data.examples) {
    wrong += (predict(model, e.features) != e.label);
  }
  return static_cast<double>(wrong) / static_cast<double>(data.size());
}

// Per-visit and per-update hooks used to instrument a run.
struct VisitEvent {
  int epoch;
  std::size_t example;   // index into the training set
  int label;
  int used_label;        // perturbed for prestige, true label otherwise
  double curriculum;     // z computed with used_label
  double threshold;      // -inf when no gate applies
  bool admitted;
};

struct UpdateEvent {
  int epoch;
  std::uint64_t t;
  double eta;
  std::size_t contributors;
  double weight_norm;  // after the update (and projection)
};

struct NullObserver {
  void on_visit(const VisitEvent&) {}
  void on_update(const UpdateEvent&) {}
};

// Shared loop for all three methods. Each epoch shuffles the training set and
// walks it in consecutive batches. Every batch member is (for prestige) label
// perturbed and gated against D_th with the weights at the start of the
// batch; the admitted gradients are averaged and, for the private methods,
// privatized once before the step w <- w - eta * G. A batch with no admitted
// member leaves w and t untouched. batch_size = 1 is plain stochastic
// training.
template <RandomSource R, typename Observer = NullObserver>
TrainResult train(const Dataset& data, const TrainConfig& cfg, R& rng,
                  const Dataset* test = nullptr, Observer&& observer = {}) {
  cfg.validate();
  if (data.empty()) throw InputError("training set is empty");
  validate(data);
  if (cfg.batch_size > data.size()) {
    throw ConfigError("batch size exceeds the number of training examples");
  }
  if (test != nullptr) {
    validate(*test);
    if (test->dimension > data.dimension) {
      throw DimensionMismatch("test set dimension exceeds training dimension");
    }
  }

  const std::size_t d = data.dimension;
  const bool is_private = cfg.method != Method::kSgd;
  const bool gated = cfg.method == Method::kPrestige;
  const RegularizedObjective& objective = cfg.objective;

  std::optional<GradientPrivatizer> privatizer;
  double step_scale = cfg.privacy.lipschitz;
  if (is_private) {
    privatizer.emplace(cfg.privacy, d);
    step_scale = privatizer->bound();
  }
  // sgd without regularization keeps the 1/sqrt(t) decay.
  const double step_lambda = objective.lambda > 0.0 ? objective.lambda : 1.0;

  TrainResult result{ModelState(d, cfg.bias), RunRecord{}};
  ModelState& model = result.model;
  for (double& w : model.weights) w = cfg.init_scale * rng.gaussian();
  if (cfg.project) model.weights = project_ball(std::move(model.weights), objective.radius);
  if (test != nullptr) result.record.initial_test_error = evaluate(model, *test);

  std::vector<std::size_t> order(data.size());
  std::vector<std::size_t> admitted;
  Vector gradient(d);
  double threshold = cfg.threshold_init;
  const double no_gate = -std::numeric_limits<double>::infinity();

  for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    shuffle(order, rng);
    const double gate = gated ? threshold : no_gate;

    for (std::size_t start = 0; start < order.size(); start += cfg.batch_size) {
      const std::size_t stop = std::min(order.size(), start + cfg.batch_size);
      admitted.clear();
      std::vector<int> used_labels;
      used_labels.reserve(stop - start);
      for (std::size_t pos = start; pos < stop; ++pos) {
        const Example& e = data.examples[order[pos]];
        const int used = gated ? randomized_response(e.label, cfg.privacy.eps_r, rng)
                               : e.label;
        const double z = curriculum_value(model, e.features, used);
        const bool in = !gated || z >= gate;
        observer.on_visit(
            VisitEvent{epoch, order[pos], e.label, used, z, gate, in});
        if (in) {
          admitted.push_back(order[pos]);
          used_labels.push_back(used);
        }
      }
      if (admitted.empty()) continue;

      // Average of lambda * w + l'(z) y x over the admitted members.
      const double inv = 1.0 / static_cast<double>(admitted.size());
      for (std::size_t i = 0; i < d; ++i) {
        gradient[i] = objective.lambda * model.weights[i];
      }
      for (std::size_t k = 0; k < admitted.size(); ++k) {
        add_loss_gradient(objective.loss, model,
                          data.examples[admitted[k]].features, used_labels[k],
                          inv, gradient);
      }

      model.updates += 1;
      const double eta =
          learning_rate(model.updates, objective.radius, step_lambda, step_scale);
      if (is_private) {
        const Vector noisy = (*privatizer)(gradient, rng);
        axpy(-eta, noisy, model.weights);
      } else {
        axpy(-eta, gradient, model.weights);
      }
      if (cfg.project) {
        model.weights = project_ball(std::move(model.weights), objective.radius);
      }
      observer.on_update(UpdateEvent{epoch, model.updates, eta, admitted.size(),
                                     norm2(model.weights)});
    }

    EpochRecord row;
    row.epoch = epoch;
    row.updates = model.updates;
    row.threshold = gated ? threshold : std::numeric_limits<double>::quiet_NaN();
    row.train_error = evaluate(model, data);
    if (test != nullptr) row.test_error = evaluate(model, *test);
    result.record.epochs.push_back(row);

    if (gated) threshold -= cfg.step_mu * std::sqrt(static_cast<double>(epoch));
  }

  result.record.final_weights = model.weights;
  switch (cfg.method) {
    case Method::kSgd:
      result.record.budget_spent = 0.0;
      break;
    case Method::kDjw:
      result.record.budget_spent = cfg.privacy.eps_s * cfg.epochs;
      break;
    case Method::kPrestige:
      result.record.budget_spent =
          compose_budget(cfg.privacy.eps_r, cfg.privacy.eps_s) * cfg.epochs;
      break;
  }
  return result;
}

inline TrainResult train(const Dataset& data, const TrainConfig& cfg,
                         const Dataset* test = nullptr) {
  Rng rng(cfg.seed);
  return train(data, cfg, rng, test);
}

namespace internal {

inline TrainConfig with_method(TrainConfig cfg, Method method) {
  cfg.method = method;
  return cfg;
}

}  // namespace internal

// Method-specific entry points. train_minibatch honours cfg.method and
// cfg.batch_size; the other three force batch size 1.

template <RandomSource R>
TrainResult train_prestige(const Dataset& data, TrainConfig cfg, R& rng,
                           const Dataset* test = nullptr) {
  cfg.batch_size = 1;
  return train(data, internal::with_method(cfg, Method::kPrestige), rng, test);
}

template <RandomSource R>
TrainResult train_djw(const Dataset& data, TrainConfig cfg, R& rng,
                      const Dataset* test = nullptr) {
  cfg.batch_size = 1;
  return train(data, internal::with_method(cfg, Method::kDjw), rng, test);
}

template <RandomSource R>
TrainResult train_sgd(const Dataset& data, TrainConfig cfg, R& rng,
                      const Dataset* test = nullptr) {
  cfg.batch_size = 1;
  return train(data, internal::with_method(cfg, Method::kSgd), rng, test);
}

template <RandomSource R, typename Observer = NullObserver>
TrainResult train_minibatch(const Dataset& data, const TrainConfig& cfg, R& rng,
                            const Dataset* test = nullptr, Observer&& observer = {}) {
  return train(data, cfg, rng, test, std::forward<Observer>(observer));
}

}  // namespace prestige

#endif  // PRESTIGE_TRAINER_HPP_
