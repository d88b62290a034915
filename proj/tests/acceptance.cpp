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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "prestige/prestige.hpp"
#include "scripted_source.hpp"

namespace {

using namespace prestige;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = false;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof(buffer), format, args...);
  return buffer;
}

std::size_t Workers() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// 1. E[G_p | g] = g.
Outcome Unbiasedness() {
  const auto start = Clock::now();
  const std::size_t n = 200000;
  bool ok = true;
  double worst_z = 0.0;
  double worst_ratio_gap = 0.0;
  std::uint64_t seed = 100;
  for (std::size_t d : {1, 2, 3, 5, 10}) {
    Vector g = reference_direction(d);
    scale(g, 0.7);
    for (BoundConvention conv :
         {BoundConvention::kUnbiased, BoundConvention::kLiteral}) {
      const PrivacySpec spec{0.0, 0.8, 1.0, conv};
      const GradientPrivatizer privatize(spec, d);
      Rng rng(seed++);
      std::vector<double> sum(d, 0.0), sum_sq(d, 0.0);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector out = privatize(g, rng);
        for (std::size_t i = 0; i < d; ++i) {
          sum[i] += out[i];
          sum_sq[i] += out[i] * out[i];
        }
      }
      if (conv == BoundConvention::kUnbiased) {
        for (std::size_t i = 0; i < d; ++i) {
          const double mean = sum[i] / n;
          const double var = (sum_sq[i] - n * mean * mean) / (n - 1);
          const double z = std::abs(mean - g[i]) / std::sqrt(var / n);
          worst_z = std::max(worst_z, z);
          ok = ok && z <= 3.0;
        }
      } else {
        double along = 0.0;
        for (std::size_t i = 0; i < d; ++i) along += sum[i] / n * g[i];
        const double ratio = along / dot(g, g);
        worst_ratio_gap = std::max(worst_ratio_gap, std::abs(ratio / 2.0 - 1.0));
        ok = ok && std::abs(ratio / 2.0 - 1.0) <= 0.05;
      }
    }
  }
  const double secs = Seconds(start);
  ok = ok && secs < 30.0;
  return {ok, Fmt("max |mean-g|/SE = %.3f (<= 3); literal-bound ratio off 2 by "
                  "%.2f%% (<= 5%%); %.1fs",
                  worst_z, 100.0 * worst_ratio_gap, secs)};
}

// 2. Sign channel of the privatizer in d = 3.
Outcome ChannelProbabilities() {
  const std::size_t n = 200000;
  const Vector e = reference_direction(3);
  bool ok = true;
  double worst_sigma = 0.0, worst_ratio = 0.0;
  std::uint64_t seed = 200;
  for (double eps : {0.5, std::log(3.0)}) {
    const double keep = std::exp(eps) / (std::exp(eps) + 1.0);
    const GradientPrivatizer privatize(PrivacySpec{0.0, eps, 1.0}, 3);
    for (double k : {0.0, 0.25, 0.5}) {
      double rate[2];
      for (int side = 0; side < 2; ++side) {
        Vector g = e;
        scale(g, (side == 0 ? 2.0 : -2.0) * k);
        Rng rng(seed++);
        std::size_t hits = 0;
        for (std::size_t i = 0; i < n; ++i) hits += dot(privatize(g, rng), e) > 0.0;
        rate[side] = static_cast<double>(hits) / n;
        // Oracle: P(sign kept) = 1/2 + k, then Q keeps it with prob `keep`.
        const double kk = side == 0 ? k : -k;
        const double p = (0.5 + kk) * keep + (0.5 - kk) * (1.0 - keep);
        const double p_lib = side == 0 ? channel_probability(k, eps)
                                       : cross_channel_probability(k, eps);
        const double sigma = std::abs(rate[side] - p) / std::sqrt(p * (1 - p) / n);
        worst_sigma = std::max(worst_sigma, sigma);
        ok = ok && sigma <= 4.0 && std::abs(p_lib - p) <= 1e-15;
      }
      if (k == 0.5) {
        const double gap = std::abs(rate[0] / rate[1] / std::exp(eps) - 1.0);
        worst_ratio = std::max(worst_ratio, gap);
        ok = ok && gap <= 0.05;
      }
    }
  }
  return {ok, Fmt("max deviation %.2f sigma (<= 4); k=0.5 ratio off e^eps by "
                  "%.2f%% (<= 5%%)",
                  worst_sigma, 100.0 * worst_ratio)};
}

// 3. Label flip rate.
Outcome RandomizedResponse() {
  const auto start = Clock::now();
  const std::size_t n = 100000;
  bool ok = true;
  double worst = 0.0;
  std::uint64_t seed = 300;
  for (double eps : {0.2, std::log(3.0), 2.0}) {
    Rng rng(seed++);
    std::size_t flips = 0;
    for (std::size_t i = 0; i < n; ++i) flips += randomized_response(-1, eps, rng) == 1;
    const double p = 1.0 / (std::exp(eps) + 1.0);
    const double sigma =
        std::abs(static_cast<double>(flips) / n - p) / std::sqrt(p * (1 - p) / n);
    worst = std::max(worst, sigma);
    ok = ok && sigma <= 4.0;
  }
  const double secs = Seconds(start);
  ok = ok && secs < 5.0;
  return {ok, Fmt("max deviation %.2f sigma (<= 4); %.2fs", worst, secs)};
}

// 4. |G_p| = B exactly.
Outcome NormExactness() {
  Rng rng(400);
  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const std::size_t d = 1 + rng.index(100);
    const PrivacySpec spec{0.0, 0.05 + 2.0 * rng.uniform(), 0.1 + 10.0 * rng.uniform(),
                           rng.uniform() < 0.5 ? BoundConvention::kUnbiased
                                               : BoundConvention::kLiteral};
    Vector g(d);
    const double spread = std::exp(4.0 * rng.gaussian());
    for (double& v : g) v = spread * rng.gaussian();
    const GradientPrivatizer privatize(spec, d);
    worst = std::max(worst, std::abs(norm2(privatize(g, rng)) / privatize.bound() - 1.0));
  }
  return {worst <= 1e-9, Fmt("max relative error %.3g (<= 1e-9)", worst)};
}

// 5. Subgradients against central differences.
Outcome GradientChecks() {
  Rng rng(500);
  const double h = 1e-6;
  double worst = 0.0;
  for (LossFamily family : {LossFamily::kLogistic, LossFamily::kGompertz}) {
    LossSpec loss;
    loss.family = family;
    for (int k = 0; k < 200; ++k) {
      const double z = -1.0 + 5.0 * rng.uniform();
      const double fd = (loss_value(loss, z + h) - loss_value(loss, z - h)) / (2 * h);
      const double g = loss_subgradient(loss, z);
      worst = std::max(worst, std::abs(fd - g) / std::abs(g));
    }
  }
  return {worst <= 1e-5, Fmt("max relative error %.3g (<= 1e-5)", worst)};
}

ExperimentConfig SyntheticSetup() {
  ExperimentConfig cfg;
  cfg.data.synthetic = SyntheticSpec{4000, 20, 4.0, 0.2, 0};
  cfg.losses = {LossSpec{LossFamily::kHinge}};
  cfg.budgets = {1.0};
  cfg.split_r = 1.0;
  cfg.split_s = 4.0;
  cfg.epochs = 10;
  cfg.repeats = 20;
  cfg.lambda.reset();  // cross validated per cell
  cfg.workers = Workers();
  cfg.timing = false;
  return cfg;
}

const ResultRow& Row(const std::vector<ResultRow>& rows, const std::string& method,
                     double eps_total = -1.0, std::size_t batch = 1) {
  for (const ResultRow& r : rows) {
    if (r.method == method && r.batch == batch &&
        (eps_total < 0 || std::abs(r.eps_r + r.eps_s - eps_total) < 1e-12)) {
      return r;
    }
  }
  throw Error("missing row for " + method);
}

bool AnyFailed(const std::vector<ResultRow>& rows) {
  return std::any_of(rows.begin(), rows.end(), [](const ResultRow& r) { return r.failed(); });
}

// 6. PRESTIGE below DJW, SGD below both.
Outcome RobustnessOrdering(const SplitData& data) {
  const auto start = Clock::now();
  const auto rows = run_experiment(SyntheticSetup(), data);
  const double secs = Seconds(start);
  const ResultRow& sgd = Row(rows, "sgd");
  const ResultRow& djw = Row(rows, "djw");
  const ResultRow& pre = Row(rows, "prestige");
  const bool ok = !AnyFailed(rows) && pre.ter_mean < djw.ter_mean &&
                  sgd.ter_mean < djw.ter_mean && sgd.ter_mean < pre.ter_mean &&
                  secs < 120.0;
  return {ok, Fmt("mean TER sgd %.4f (lambda %g), djw %.4f (lambda %g), prestige "
                  "%.4f (lambda %g); need prestige < djw and sgd < both; %.1fs",
                  sgd.ter_mean, sgd.lambda, djw.ter_mean, djw.lambda, pre.ter_mean,
                  pre.lambda, secs)};
}

// Average ranks, ties share the mean position.
std::vector<double> Ranks(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> rank(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    for (std::size_t k = i; k <= j; ++k) rank[idx[k]] = 0.5 * (i + j) + 1.0;
    i = j + 1;
  }
  return rank;
}

double Spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const std::vector<double> rx = Ranks(x), ry = Ranks(y);
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += rx[i] / n;
    my += ry[i] / n;
  }
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// 7. TER falls as the budget grows.
Outcome BudgetMonotonicity(const SplitData& data) {
  const auto start = Clock::now();
  ExperimentConfig cfg = SyntheticSetup();
  cfg.methods = {Method::kDjw, Method::kPrestige};
  cfg.budgets = {0.8, 1.0, 1.2, 1.4, 1.6};
  const auto rows = run_experiment(cfg, data);
  const double secs = Seconds(start);
  bool ok = !AnyFailed(rows) && secs < 600.0;
  std::string detail;
  for (const char* method : {"djw", "prestige"}) {
    std::vector<double> ters;
    detail += std::string(method) + " TER";
    for (double eps : cfg.budgets) {
      ters.push_back(Row(rows, method, eps).ter_mean);
      detail += Fmt(" %.4f", ters.back());
    }
    const double rho = Spearman(cfg.budgets, ters);
    ok = ok && rho < 0.0;
    detail += Fmt(" (spearman %.2f); ", rho);
  }
  return {ok, detail + Fmt("need both < 0; %.1fs", secs)};
}

// 8. PRESTIGE spread shrinks with batch size.
Outcome BatchVariance(const SplitData& data) {
  ExperimentConfig cfg = SyntheticSetup();
  cfg.methods = {Method::kPrestige};
  cfg.batch_sizes = {1, 5, 10};
  const auto rows = run_experiment(cfg, data);
  const double s1 = Row(rows, "prestige", 1.0, 1).ter_std;
  const double s5 = Row(rows, "prestige", 1.0, 5).ter_std;
  const double s10 = Row(rows, "prestige", 1.0, 10).ter_std;
  const bool ok = !AnyFailed(rows) && s5 <= s1 && s10 <= s5;
  return {ok, Fmt("TER std batch 1 %.4f, 5 %.4f, 10 %.4f (mean %.4f, %.4f, %.4f); "
                  "need non-increasing",
                  s1, s5, s10, Row(rows, "prestige", 1.0, 1).ter_mean,
                  Row(rows, "prestige", 1.0, 5).ter_mean,
                  Row(rows, "prestige", 1.0, 10).ter_mean)};
}

// 9. Step-by-step replay against a direct transcription of the algorithm.
struct ReferenceStep {
  int epoch;
  std::size_t example;
  bool admitted;
  std::uint64_t t;
  double eta;
};

struct Reference {
  std::vector<ReferenceStep> steps;
  std::vector<double> thresholds;
  std::vector<double> weights;
};

Reference ReferenceRun(const Dataset& data, double lambda, double radius,
                       double eps_r, double eps_s, double lipschitz, int epochs,
                       testing::ScriptedSource& src) {
  const std::size_t n = data.size(), d = data.dimension;
  std::vector<std::vector<double>> x(n, std::vector<double>(d, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (const Feature& f : data.examples[i].features) x[i][f.index] = f.value;
  }
  const auto norm = [](const std::vector<double>& v) {
    double s = 0;
    for (double a : v) s += a * a;
    return std::sqrt(s);
  };
  const double half_d = 0.5 * static_cast<double>(d);
  const double m_d = std::tgamma(half_d) /
                     (std::sqrt(std::numbers::pi) * std::tgamma(half_d + 0.5));
  const double bound = lipschitz / std::tanh(0.5 * eps_s) / m_d;

  Reference ref;
  std::vector<double> w(d);
  for (double& v : w) v = src.gaussian();
  if (norm(w) > radius) {
    const double s = radius / norm(w);
    for (double& v : w) v *= s;
  }
  double threshold = 1.5;
  std::uint64_t t = 0;
  for (int epoch = 1; epoch <= epochs; ++epoch) {
    ref.thresholds.push_back(threshold);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i >= 2; --i) std::swap(order[i - 1], order[src.index(i)]);
    for (std::size_t i : order) {
      int y = data.examples[i].label;
      if (src.uniform() < 1.0 / (std::exp(eps_r) + 1.0)) y = -y;
      double z = 0;
      for (std::size_t j = 0; j < d; ++j) z += w[j] * x[i][j];
      z *= y;
      if (z < threshold) {
        ref.steps.push_back({epoch, i, false, t, 0.0});
        continue;
      }
      ++t;
      const double eta = radius / (lambda * bound * std::sqrt(static_cast<double>(t)));
      std::vector<double> g(d);
      for (std::size_t j = 0; j < d; ++j) g[j] = lambda * w[j] - (z < 1.0 ? y * x[i][j] : 0.0);
      double gn = norm(g);
      if (gn > lipschitz) {
        for (double& v : g) v *= lipschitz / gn;
        gn = lipschitz;
      }
      std::vector<double> v(d);
      if (gn == 0.0) {
        do {
          for (double& a : v) a = src.gaussian();
        } while (norm(v) == 0.0);
      } else {
        const double sign = src.uniform() < 0.5 + gn / (2.0 * lipschitz) ? 1.0 : -1.0;
        for (std::size_t j = 0; j < d; ++j) v[j] = sign * g[j];
      }
      if (!(src.uniform() < std::exp(eps_s) / (std::exp(eps_s) + 1.0))) {
        for (double& a : v) a = -a;
      }
      std::vector<double> u(d);
      double side = 0;
      do {
        for (double& a : u) a = src.gaussian();
        side = 0;
        for (std::size_t j = 0; j < d; ++j) side += u[j] * v[j];
      } while (norm(u) == 0.0 || side == 0.0);
      const double un = norm(u);
      for (std::size_t j = 0; j < d; ++j) {
        w[j] -= eta * (side > 0 ? 1.0 : -1.0) * u[j] / un * bound;
      }
      if (norm(w) > radius) {
        const double s = radius / norm(w);
        for (double& a : w) a *= s;
      }
      ref.steps.push_back({epoch, i, true, t, eta});
    }
    threshold -= std::sqrt(static_cast<double>(epoch));
  }
  ref.weights = w;
  return ref;
}

Outcome TraceConformance() {
  Dataset data;
  data.dimension = 2;
  const double points[10][2] = {{1.2, 0.4},  {-0.8, -1.1}, {2.0, -0.3}, {-1.5, 0.2},
                                {0.3, 1.6},  {-0.2, -0.9}, {1.1, 1.1},  {-2.2, 0.7},
                                {0.6, -0.5}, {-0.4, 1.3}};
  const int labels[10] = {1, -1, 1, -1, 1, -1, 1, -1, -1, 1};
  for (int i = 0; i < 10; ++i) {
    data.examples.push_back(
        Example{{{0, points[i][0]}, {1, points[i][1]}}, labels[i]});
  }
  const std::vector<double> uniforms = {0.91, 0.12, 0.55, 0.37, 0.73, 0.08,
                                        0.64, 0.29, 0.98, 0.46, 0.21};
  const std::vector<double> gaussians = {0.8,  -0.3, 1.1, 0.4,  -0.7, 1.9,
                                         -1.2, 0.25, 0.6, -0.05, 1.4};
  const std::vector<std::size_t> indices = {3, 1, 4, 1, 5, 9, 2, 6, 5};

  TrainConfig cfg;
  cfg.method = Method::kPrestige;
  cfg.objective.lambda = 1.0;
  cfg.objective.radius = 5.0;
  cfg.privacy = PrivacySpec{std::log(3.0), 0.8, 1.0};
  cfg.epochs = 3;
  cfg.init_scale = 1.0;

  struct Recorder {
    std::vector<VisitEvent> visits;
    std::vector<UpdateEvent> updates;
    void on_visit(const VisitEvent& e) { visits.push_back(e); }
    void on_update(const UpdateEvent& e) { updates.push_back(e); }
  } rec;
  testing::ScriptedSource lib_src(uniforms, gaussians, indices);
  const TrainResult result = train(data, cfg, lib_src, nullptr, rec);
  testing::ScriptedSource ref_src(uniforms, gaussians, indices);
  const Reference ref = ReferenceRun(data, 1.0, 5.0, std::log(3.0), 0.8, 1.0, 3, ref_src);

  bool ok = rec.visits.size() == ref.steps.size();
  std::size_t admitted = 0, rejected = 0, u = 0;
  double worst_eta = 0.0;
  for (std::size_t k = 0; ok && k < ref.steps.size(); ++k) {
    const ReferenceStep& s = ref.steps[k];
    const VisitEvent& v = rec.visits[k];
    ok = v.epoch == s.epoch && v.example == s.example && v.admitted == s.admitted &&
         v.threshold == ref.thresholds[s.epoch - 1];
    if (!ok) break;
    if (s.admitted) {
      ++admitted;
      ok = u < rec.updates.size() && rec.updates[u].t == s.t;
      if (!ok) break;
      const double rel = std::abs(rec.updates[u].eta / s.eta - 1.0);
      worst_eta = std::max(worst_eta, rel);
      ok = rel <= 1e-12;
      ++u;
    } else {
      ++rejected;
    }
  }
  ok = ok && u == rec.updates.size() && result.model.updates == u;
  const std::vector<double> expected_thresholds = {1.5, 0.5, 0.5 - std::sqrt(2.0)};
  for (std::size_t e = 0; e < 3; ++e) {
    ok = ok && std::abs(ref.thresholds[e] - expected_thresholds[e]) <= 1e-15 &&
         std::abs(result.record.epochs[e].threshold - expected_thresholds[e]) <= 1e-15;
  }
  double weight_gap = 0.0;
  for (std::size_t j = 0; j < 2; ++j) {
    weight_gap = std::max(weight_gap, std::abs(result.model.weights[j] - ref.weights[j]));
  }
  ok = ok && weight_gap <= 1e-9 && admitted > 0 && rejected > 0 &&
       lib_src.uniform_calls() == ref_src.uniform_calls() &&
       lib_src.gaussian_calls() == ref_src.gaussian_calls() &&
       lib_src.index_calls() == ref_src.index_calls();
  return {ok, Fmt("%zu visits, %zu admitted, %zu gated out; max eta rel. error %.2g; "
                  "thresholds %.6f %.6f %.6f; final w gap %.2g",
                  rec.visits.size(), admitted, rejected, worst_eta,
                  result.record.epochs[0].threshold, result.record.epochs[1].threshold,
                  result.record.epochs[2].threshold, weight_gap)};
}

// 10. Byte-identical reruns.
std::string Serialize(const TrainResult& r) {
  std::string out;
  for (const EpochRecord& e : r.record.epochs) {
    out += Fmt("%d %zu %a %a %a\n", e.epoch, e.updates, e.threshold, e.train_error,
               e.test_error);
  }
  for (double w : r.record.final_weights) out += Fmt("%a ", w);
  out += Fmt("\n%a %a\n", r.record.initial_test_error, r.record.budget_spent);
  return out;
}

Outcome Determinism() {
  const Dataset data = synth_two_gaussians(SyntheticSpec{500, 8, 3.0, 0.2, 1});
  Rng split_rng(2);
  const auto [train_set, test_set] = split(data, 0.2, split_rng);
  TrainConfig cfg;
  cfg.objective.lambda = 0.1;
  cfg.seed = 42;

  using Runner = std::function<TrainResult(Rng&)>;
  const std::vector<std::pair<const char*, Runner>> runners = {
      {"sgd", [&](Rng& r) { return train_sgd(train_set, cfg, r, &test_set); }},
      {"djw", [&](Rng& r) { return train_djw(train_set, cfg, r, &test_set); }},
      {"prestige", [&](Rng& r) { return train_prestige(train_set, cfg, r, &test_set); }},
      {"minibatch", [&](Rng& r) {
         TrainConfig mb = cfg;
         mb.method = Method::kPrestige;
         mb.batch_size = 8;
         return train_minibatch(train_set, mb, r, &test_set);
       }}};
  bool ok = true;
  std::string detail;
  for (const auto& [name, run] : runners) {
    Rng a(cfg.seed), b(cfg.seed);
    const bool same = Serialize(run(a)) == Serialize(run(b));
    ok = ok && same;
    if (!same) detail += std::string(name) + " differs; ";
  }

  ExperimentConfig ex;
  ex.data.synthetic = SyntheticSpec{400, 5, 3.0, 0.2, 3};
  ex.budgets = {0.5, 1.0};
  ex.batch_sizes = {1, 4};
  ex.epochs = 4;
  ex.repeats = 5;
  ex.timing = false;
  ex.workers = Workers();
  std::ostringstream first, second;
  write_csv(first, run_experiment(ex));
  write_csv(second, run_experiment(ex));
  const bool same_csv = first.str() == second.str();
  ok = ok && same_csv;
  if (!same_csv) detail += "run_experiment CSV differs; ";
  return {ok, detail.empty() ? Fmt("4 trainers and a %zu-byte experiment CSV repeat "
                                   "byte for byte",
                                   first.str().size())
                             : detail};
}

}  // namespace

int main() {
  int failures = 0;
  const auto report = [&](int id, const char* name, const std::function<Outcome()>& fn) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::printf("criterion %2d %-24s %s  %s\n", id, name, o.passed ? "PASS" : "FAIL",
                o.detail.c_str());
    std::fflush(stdout);
  };

  report(1, "unbiasedness", Unbiasedness);
  report(2, "channel-probabilities", ChannelProbabilities);
  report(3, "randomized-response", RandomizedResponse);
  report(4, "norm-exactness", NormExactness);
  report(5, "gradient-checks", GradientChecks);

  ExperimentConfig setup = SyntheticSetup();
  const SplitData data = load_experiment_data(setup);
  report(6, "robustness-ordering", [&] { return RobustnessOrdering(data); });
  report(7, "budget-monotonicity", [&] { return BudgetMonotonicity(data); });
  report(8, "batch-variance", [&] { return BatchVariance(data); });
  report(9, "trace-conformance", TraceConformance);
  report(10, "determinism", Determinism);

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
