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

#ifndef PRESTIGE_EXPERIMENT_HPP_
#define PRESTIGE_EXPERIMENT_HPP_

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "prestige/data.hpp"
#include "prestige/errors.hpp"
#include "prestige/loss.hpp"
#include "prestige/mechanism.hpp"
#include "prestige/random.hpp"
#include "prestige/trainer.hpp"
#include "prestige/types.hpp"

namespace prestige {

inline constexpr std::array<double, 7> kLambdaGrid = {1e-3, 1e-2, 1e-1, 1.0,
                                                      1e1,  1e2,  1e3};

// Welford accumulator; stddev() uses the n - 1 denominator.
class RunningStats {
 public:
  void add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }
  std::size_t count() const { return count_; }
  double mean() const { return mean_; }
  double stddev() const {
    return count_ > 1 ? std::sqrt(m2_ / static_cast<double>(count_ - 1)) : 0.0;
  }

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// Calls fn(i) for i in [0, count) on up to `workers` threads. Each index is
// handled exactly once; the first exception is rethrown after all threads join.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

// L = sup|l'| * max_i |x_i| + lambda * R bounds |g| for every example while w
// stays in the ball. Looks at the training data, so it is not private.
inline double auto_lipschitz(const Dataset& data,
                             const RegularizedObjective& objective) {
  double max_norm = 0.0;
  for (const Example& e : data.examples) {
    max_norm = std::max(max_norm, sparse_norm2(e.features));
  }
  const double bound = max_abs_subgradient(objective.loss) * max_norm +
                       objective.lambda * objective.radius;
  return bound > 0.0 ? bound : 1.0;
}

struct LambdaSelection {
  double lambda = 0.0;
  std::array<double, kLambdaGrid.size()> mean_error{};
};

// 10-fold cross validation of cfg over kLambdaGrid; fold membership is a
// seeded permutation taken modulo the fold count. Ties go to the larger
// lambda. When auto_l is set the Lipschitz constant is recomputed per lambda.
inline LambdaSelection cross_validate_lambda(const Dataset& data,
                                             const TrainConfig& cfg,
                                             std::uint64_t seed,
                                             bool auto_l = false,
                                             std::size_t folds = 10) {
  if (folds < 2) throw ConfigError("cross validation needs >= 2 folds");
  if (data.size() < folds) {
    throw InputError("cross validation needs at least " +
                     std::to_string(folds) + " examples");
  }
  Rng fold_rng(seed);
  const std::vector<std::size_t> order = permutation(data.size(), fold_rng);
  std::vector<Dataset> fit(folds), held(folds);
  for (std::size_t f = 0; f < folds; ++f) {
    fit[f].dimension = held[f].dimension = data.dimension;
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t fold = k % folds;
    for (std::size_t f = 0; f < folds; ++f) {
      (f == fold ? held[f] : fit[f]).examples.push_back(data.examples[order[k]]);
    }
  }

  LambdaSelection selection;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t g = kLambdaGrid.size(); g-- > 0;) {
    TrainConfig candidate = cfg;
    candidate.objective.lambda = kLambdaGrid[g];
    candidate.seed = seed;
    RunningStats errors;
    for (std::size_t f = 0; f < folds; ++f) {
      if (auto_l) {
        candidate.privacy.lipschitz = auto_lipschitz(fit[f], candidate.objective);
      }
      candidate.batch_size = std::min(cfg.batch_size, fit[f].size());
      Rng rng(seed + f);
      const TrainResult r = train(fit[f], candidate, rng);
      errors.add(evaluate(r.model, held[f]));
    }
    selection.mean_error[g] = errors.mean();
    if (errors.mean() < best) {
      best = errors.mean();
      selection.lambda = kLambdaGrid[g];
    }
  }
  return selection;
}

struct DataSource {
  std::optional<std::string> train_path;
  std::optional<std::string> test_path;  // when absent, train is split
  std::optional<SyntheticSpec> synthetic;
  double test_fraction = 0.2;
  std::optional<std::size_t> dimension;
  std::optional<LabelMap> label_map;
  bool rebalance = false;
};

struct ExperimentConfig {
  DataSource data;
  std::vector<Method> methods = {Method::kSgd, Method::kDjw, Method::kPrestige};
  std::vector<LossSpec> losses = {LossSpec{}};
  std::vector<double> budgets = {1.0};  // per-update eps = eps_r + eps_s
  double split_r = 1.0;                 // eps_r : eps_s
  double split_s = 4.0;
  int epochs = 10;
  std::vector<std::size_t> batch_sizes = {1};
  int repeats = 20;
  std::uint64_t base_seed = 0;
  std::optional<double> lambda;  // nullopt: cross validate per cell
  std::optional<double> lipschitz = 1.0;  // nullopt: auto_lipschitz
  double radius = 1.0;
  bool project = true;
  BoundConvention convention = BoundConvention::kUnbiased;
  double threshold_init = 1.5;
  double mu = 1.0;
  std::size_t workers = 1;
  bool timing = true;  // false writes 0 seconds so output is byte-stable

  void validate() const {
    if (repeats < 1) throw ConfigError("repeats must be >= 1");
    if (epochs < 1) throw ConfigError("epochs must be >= 1");
    if (methods.empty()) throw ConfigError("no methods selected");
    if (losses.empty()) throw ConfigError("no losses selected");
    if (batch_sizes.empty()) throw ConfigError("no batch sizes selected");
    for (std::size_t b : batch_sizes) {
      if (b < 1) throw ConfigError("batch sizes must be >= 1");
    }
    if (budgets.empty()) throw ConfigError("no budgets selected");
    for (double b : budgets) {
      if (!(b > 0.0) || !std::isfinite(b)) throw ConfigError("every budget must be > 0");
    }
    if (!(split_r > 0.0) || !(split_s > 0.0)) {
      throw ConfigError("budget split components must be positive");
    }
    if (lambda && !(*lambda >= 0.0)) throw ConfigError("lambda must be >= 0");
    if (lipschitz && !(*lipschitz > 0.0)) throw ConfigError("lipschitz must be > 0");
    for (const LossSpec& l : losses) l.validate();
  }
};

struct ResultRow {
  std::string method;
  std::string loss;
  double eps_r = 0.0;
  double eps_s = 0.0;
  std::size_t batch = 1;
  int repeats = 0;
  double ter_mean = 0.0;
  double ter_std = 0.0;
  double updates_mean = 0.0;
  double seconds = 0.0;
  double lambda = 0.0;
  std::string error;  // non-empty marks a failed cell

  bool failed() const { return !error.empty(); }
};

struct SplitData {
  Dataset train;
  Dataset test;
};

// Loads or synthesizes the data and produces the train/test pair. Splitting
// and rebalancing are seeded by base_seed.
inline SplitData load_experiment_data(const ExperimentConfig& cfg) {
  const DataSource& src = cfg.data;
  ParseOptions options;
  options.dimension = src.dimension;
  options.label_map = src.label_map;

  Dataset train;
  std::optional<Dataset> test;
  if (src.synthetic) {
    train = synth_two_gaussians(*src.synthetic);
  } else if (src.train_path) {
    train = load_sparse_text(*src.train_path, options);
    if (src.test_path) test = load_sparse_text(*src.test_path, options);
  } else {
    throw ConfigError("no data source given");
  }

  Rng rng(cfg.base_seed);
  if (src.rebalance) train = rebalance(train, rng);
  if (!test) {
    auto [a, b] = split(train, src.test_fraction, rng);
    train = std::move(a);
    test = std::move(b);
  }
  const std::size_t d = std::max(train.dimension, test->dimension);
  train.dimension = test->dimension = d;
  if (train.empty() || test->empty()) {
    throw InputError("train and test sets must both be non-empty");
  }
  return SplitData{std::move(train), std::move(*test)};
}

namespace internal {

struct Cell {
  Method method;
  LossSpec loss;
  double eps_r;
  double eps_s;
  std::size_t batch;
};

// sgd has no budget, so it gets one cell per (loss, batch).
inline std::vector<Cell> enumerate_cells(const ExperimentConfig& cfg) {
  std::vector<Cell> cells;
  for (Method m : cfg.methods) {
    for (const LossSpec& loss : cfg.losses) {
      for (std::size_t batch : cfg.batch_sizes) {
        if (m == Method::kSgd) {
          cells.push_back(Cell{m, loss, 0.0, 0.0, batch});
          continue;
        }
        for (double eps : cfg.budgets) {
          if (m == Method::kDjw) {
            cells.push_back(Cell{m, loss, 0.0, eps, batch});
          } else {
            const double r = eps * cfg.split_r / (cfg.split_r + cfg.split_s);
            cells.push_back(Cell{m, loss, r, eps - r, batch});
          }
        }
      }
    }
  }
  return cells;
}

inline TrainConfig cell_config(const ExperimentConfig& cfg, const Cell& cell) {
  TrainConfig tc;
  tc.method = cell.method;
  tc.objective.loss = cell.loss;
  tc.objective.radius = cfg.radius;
  tc.objective.lambda = cfg.lambda.value_or(1.0);
  tc.privacy.eps_r = cell.eps_r;
  tc.privacy.eps_s = cell.method == Method::kSgd ? 1.0 : cell.eps_s;
  tc.privacy.lipschitz = cfg.lipschitz.value_or(1.0);
  tc.privacy.convention = cfg.convention;
  tc.epochs = cfg.epochs;
  tc.batch_size = cell.batch;
  tc.threshold_init = cfg.threshold_init;
  tc.step_mu = cfg.mu;
  tc.project = cfg.project;
  return tc;
}

}  // namespace internal

// Runs every (method, loss, budget, batch) cell `repeats` times with seeds
// base_seed + i and aggregates the final test error. Rows come out in a fixed
// order independent of the worker count.
inline std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg,
                                             const SplitData& data) {
  cfg.validate();
  std::vector<ResultRow> rows;
  for (const internal::Cell& cell : internal::enumerate_cells(cfg)) {
    ResultRow row;
    row.method = std::string(to_string(cell.method));
    row.loss = std::string(to_string(cell.loss.family));
    row.eps_r = cell.eps_r;
    row.eps_s = cell.eps_s;
    row.batch = cell.batch;
    row.repeats = cfg.repeats;
    const auto start = std::chrono::steady_clock::now();
    try {
      TrainConfig tc = internal::cell_config(cfg, cell);
      if (!cfg.lambda) {
        tc.objective.lambda =
            cross_validate_lambda(data.train, tc, cfg.base_seed, !cfg.lipschitz)
                .lambda;
      }
      if (!cfg.lipschitz) {
        tc.privacy.lipschitz = auto_lipschitz(data.train, tc.objective);
      }
      row.lambda = tc.objective.lambda;

      std::vector<double> errors(static_cast<std::size_t>(cfg.repeats));
      std::vector<double> updates(errors.size());
      parallel_for(errors.size(), cfg.workers, [&](std::size_t i) {
        TrainConfig run = tc;
        run.seed = cfg.base_seed + i;
        Rng rng(run.seed);
        const TrainResult r = train(data.train, run, rng);
        errors[i] = evaluate(r.model, data.test);
        updates[i] = static_cast<double>(r.model.updates);
      });
      RunningStats ter, upd;
      for (std::size_t i = 0; i < errors.size(); ++i) {
        ter.add(errors[i]);
        upd.add(updates[i]);
      }
      row.ter_mean = ter.mean();
      row.ter_std = ter.stddev();
      row.updates_mean = upd.mean();
    } catch (const Error& e) {
      row.error = e.what();
      row.ter_mean = row.ter_std = row.updates_mean =
          std::numeric_limits<double>::quiet_NaN();
    }
    if (cfg.timing) {
      row.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
  return run_experiment(cfg, load_experiment_data(cfg));
}

inline constexpr const char* kCsvHeader =
    "method,loss,eps_r,eps_s,batch,repeats,ter_mean,ter_std,updates_mean,"
    "seconds";

// Six significant digits.
inline std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

inline void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kCsvHeader << '\n';
  for (const ResultRow& r : rows) {
    out << r.method << ',' << r.loss << ',' << format_number(r.eps_r) << ','
        << format_number(r.eps_s) << ',' << r.batch << ',' << r.repeats << ','
        << format_number(r.ter_mean) << ',' << format_number(r.ter_std) << ','
        << format_number(r.updates_mean) << ',' << format_number(r.seconds)
        << '\n';
  }
  if (!out) throw IoError("CSV write failure");
}

inline void emit_csv(const std::vector<ResultRow>& rows,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_csv(out, rows);
  out.flush();
  if (!out) throw IoError("write failure on " + path);
}

}  // namespace prestige

#endif  // PRESTIGE_EXPERIMENT_HPP_
