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

// Experiment harness: run, cv, synth, verify.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prestige/prestige.hpp"

namespace {

using namespace prestige;

struct Options {
  std::string data_train;
  std::string data_test;
  std::string synthetic;  // n,d,margin,noise
  std::vector<std::string> methods = {"sgd", "djw", "prestige"};
  std::vector<std::string> losses = {"hinge"};
  std::vector<double> budgets = {1.0};
  std::string eps_split = "1:4";
  int epochs = 10;
  std::vector<std::size_t> batches = {1};
  int repeats = 20;
  std::uint64_t seed = 0;
  std::string lambda = "cv";
  std::string lipschitz = "1";
  double radius = 1.0;
  bool no_project = false;
  std::string convention = "unbiased";
  double threshold_init = 1.5;
  double mu = 1.0;
  std::size_t workers = 1;
  std::string out;
  double gompertz_c = 2.0;
  double ramp_s = -1.0;
  std::size_t dimension = 0;
  std::string label_map;  // pos:neg
  bool rebalance = false;
  double test_fraction = 0.2;
  bool no_timing = false;
  std::size_t samples = 200000;
};

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, sep)) parts.push_back(item);
  return parts;
}

double to_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad " + what + ": '" + text + "'");
  }
}

SyntheticSpec parse_synthetic(const std::string& text, std::uint64_t seed) {
  const auto parts = split_on(text, ',');
  if (parts.size() != 4) throw ConfigError("--synthetic expects n,d,margin,noise");
  SyntheticSpec spec;
  spec.n = static_cast<std::size_t>(to_double(parts[0], "synthetic n"));
  spec.d = static_cast<std::size_t>(to_double(parts[1], "synthetic d"));
  spec.margin = to_double(parts[2], "synthetic margin");
  spec.noise_rate = to_double(parts[3], "synthetic noise");
  spec.seed = seed;
  spec.validate();
  return spec;
}

ExperimentConfig build_config(const Options& o) {
  ExperimentConfig cfg;
  if (!o.synthetic.empty()) {
    cfg.data.synthetic = parse_synthetic(o.synthetic, o.seed);
  } else if (!o.data_train.empty()) {
    cfg.data.train_path = o.data_train;
    if (!o.data_test.empty()) cfg.data.test_path = o.data_test;
  } else {
    throw ConfigError("give --data-train or --synthetic");
  }
  cfg.data.test_fraction = o.test_fraction;
  if (o.dimension > 0) cfg.data.dimension = o.dimension;
  if (!o.label_map.empty()) {
    const auto parts = split_on(o.label_map, ':');
    if (parts.size() != 2) throw ConfigError("--label-map expects pos:neg");
    cfg.data.label_map = LabelMap{to_double(parts[0], "label"),
                                  to_double(parts[1], "label")};
  }
  cfg.data.rebalance = o.rebalance;

  cfg.methods.clear();
  for (const std::string& m : o.methods) {
    const auto method = parse_method(m);
    if (!method) throw ConfigError("unknown method '" + m + "'");
    cfg.methods.push_back(*method);
  }
  cfg.losses.clear();
  for (const std::string& l : o.losses) {
    const auto family = parse_loss_family(l);
    if (!family) throw ConfigError("unknown loss '" + l + "'");
    cfg.losses.push_back(LossSpec{*family, o.gompertz_c, o.ramp_s});
  }
  cfg.budgets = o.budgets;
  const auto ratio = split_on(o.eps_split, ':');
  if (ratio.size() != 2) throw ConfigError("--eps-split expects r:s");
  cfg.split_r = to_double(ratio[0], "eps split");
  cfg.split_s = to_double(ratio[1], "eps split");
  cfg.epochs = o.epochs;
  cfg.batch_sizes = o.batches;
  cfg.repeats = o.repeats;
  cfg.base_seed = o.seed;
  if (o.lambda == "cv") {
    cfg.lambda.reset();
  } else {
    cfg.lambda = to_double(o.lambda, "lambda");
  }
  if (o.lipschitz == "auto") {
    cfg.lipschitz.reset();
  } else {
    cfg.lipschitz = to_double(o.lipschitz, "lipschitz");
  }
  cfg.radius = o.radius;
  cfg.project = !o.no_project;
  const auto convention = parse_bound_convention(o.convention);
  if (!convention) throw ConfigError("unknown bound convention '" + o.convention + "'");
  cfg.convention = *convention;
  cfg.threshold_init = o.threshold_init;
  cfg.mu = o.mu;
  cfg.workers = o.workers;
  cfg.timing = !o.no_timing;
  cfg.validate();
  return cfg;
}

void print_budget_note(const ExperimentConfig& cfg, std::size_t n) {
  for (double eps : cfg.budgets) {
    std::cerr << "budget eps=" << format_number(eps)
              << " per update; per example over " << cfg.epochs
              << " epochs: " << format_number(eps * cfg.epochs)
              << "; eps*n*T_max: "
              << format_number(eps * static_cast<double>(n) * cfg.epochs) << '\n';
  }
  if (!cfg.lipschitz) {
    std::cerr << "note: --lipschitz auto reads the training data and is not "
                 "covered by the privacy accounting\n";
  }
}

int do_run(const Options& o) {
  const ExperimentConfig cfg = build_config(o);
  const SplitData data = load_experiment_data(cfg);
  print_budget_note(cfg, data.train.size());
  const std::vector<ResultRow> rows = run_experiment(cfg, data);
  if (o.out.empty()) {
    write_csv(std::cout, rows);
  } else {
    emit_csv(rows, o.out);
  }
  int status = 0;
  for (const ResultRow& r : rows) {
    if (r.failed()) {
      std::cerr << "cell " << r.method << '/' << r.loss << " failed: " << r.error << '\n';
      status = 1;
    } else if (!cfg.lambda) {
      std::cerr << "cell " << r.method << '/' << r.loss << " eps_s="
                << format_number(r.eps_s) << " batch=" << r.batch
                << ": cv lambda " << format_number(r.lambda) << '\n';
    }
  }
  return status;
}

int do_cv(const Options& o) {
  ExperimentConfig cfg = build_config(o);
  const SplitData data = load_experiment_data(cfg);
  const std::vector<internal::Cell> cells = internal::enumerate_cells(cfg);
  std::ostringstream text;
  text << "method,loss,eps_r,eps_s,batch,lambda,cv_error\n";
  for (const internal::Cell& cell : cells) {
    TrainConfig tc = internal::cell_config(cfg, cell);
    const LambdaSelection sel =
        cross_validate_lambda(data.train, tc, cfg.base_seed, !cfg.lipschitz);
    for (std::size_t g = 0; g < kLambdaGrid.size(); ++g) {
      text << to_string(cell.method) << ',' << to_string(cell.loss.family) << ','
           << format_number(cell.eps_r) << ',' << format_number(cell.eps_s) << ','
           << cell.batch << ',' << format_number(kLambdaGrid[g]) << ','
           << format_number(sel.mean_error[g]) << '\n';
    }
    std::cerr << to_string(cell.method) << '/' << to_string(cell.loss.family)
              << " eps_s=" << format_number(cell.eps_s) << " batch=" << cell.batch
              << ": selected lambda " << format_number(sel.lambda) << '\n';
  }
  if (o.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(o.out, std::ios::binary);
    if (!(out << text.str())) throw IoError("cannot write " + o.out);
  }
  return 0;
}

int do_synth(const Options& o) {
  if (o.synthetic.empty()) throw ConfigError("synth needs --synthetic n,d,margin,noise");
  const Dataset data = synth_two_gaussians(parse_synthetic(o.synthetic, o.seed));
  if (o.out.empty()) {
    write_sparse_text(std::cout, data);
  } else {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw IoError("cannot open " + o.out);
    write_sparse_text(out, data);
  }
  return 0;
}

int do_verify(const Options& o) {
  const auto convention = parse_bound_convention(o.convention);
  if (!convention) throw ConfigError("unknown bound convention '" + o.convention + "'");
  const MechanismReport report = verify_mechanisms(o.samples, o.seed, *convention);
  write_report(std::cout, report);
  if (!o.out.empty()) write_report(o.out, report);
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  if (const char* env = std::getenv("PRESTIGE_WORKERS")) {
    o.workers = static_cast<std::size_t>(std::max(1, std::atoi(env)));
  }

  CLI::App app{"Locally private stochastic gradual learning benchmarks"};
  app.require_subcommand(1);

  const auto add_data = [&](CLI::App* cmd) {
    cmd->add_option("--data-train", o.data_train, "Training file (sparse text)");
    cmd->add_option("--data-test", o.data_test, "Test file; otherwise the training data is split");
    cmd->add_option("--synthetic", o.synthetic, "Synthetic two-Gaussian data n,d,margin,noise");
    cmd->add_option("--dimension", o.dimension, "Declared feature dimension");
    cmd->add_option("--label-map", o.label_map, "Raw labels mapped to +1:-1, e.g. 8:3");
    cmd->add_flag("--rebalance", o.rebalance, "Subsample the majority class to 1:1");
    cmd->add_option("--test-fraction", o.test_fraction, "Held-out fraction when splitting");
  };
  const auto add_training = [&](CLI::App* cmd) {
    cmd->add_option("--method", o.methods, "sgd, djw, prestige (repeatable)");
    cmd->add_option("--loss", o.losses, "hinge, logistic, gompertz, ramp (repeatable)");
    cmd->add_option("--eps", o.budgets, "Per-update budget eps (repeatable)");
    cmd->add_option("--eps-split", o.eps_split, "eps_r:eps_s ratio for prestige");
    cmd->add_option("--epochs", o.epochs, "T_max");
    cmd->add_option("--batch", o.batches, "Mini-batch size (repeatable)");
    cmd->add_option("--repeats", o.repeats, "Seeded repeats per cell");
    cmd->add_option("--lambda", o.lambda, "Regularization value or 'cv'");
    cmd->add_option("--lipschitz", o.lipschitz, "Lipschitz constant L or 'auto'");
    cmd->add_option("--radius", o.radius, "Ball radius R");
    cmd->add_flag("--no-project", o.no_project, "Do not project w onto the ball");
    cmd->add_option("--bound-convention", o.convention, "unbiased | literal");
    cmd->add_option("--threshold-init", o.threshold_init, "Initial curriculum threshold");
    cmd->add_option("--mu", o.mu, "Threshold step size");
    cmd->add_option("--workers", o.workers, "Parallel runs (env PRESTIGE_WORKERS)");
    cmd->add_option("--gompertz-c", o.gompertz_c, "Gompertz loss c*");
    cmd->add_option("--ramp-s", o.ramp_s, "Ramp loss s* in [-2, 0]");
    cmd->add_flag("--no-timing", o.no_timing, "Write 0 in the seconds column");
  };

  CLI::App* run = app.add_subcommand("run", "Run experiments and write CSV");
  add_data(run);
  add_training(run);
  CLI::App* cv = app.add_subcommand("cv", "Select lambda by 10-fold cross validation");
  add_data(cv);
  add_training(cv);
  CLI::App* synth = app.add_subcommand("synth", "Write a synthetic dataset");
  synth->add_option("--synthetic", o.synthetic, "n,d,margin,noise")->required();
  CLI::App* verify = app.add_subcommand("verify", "Statistical checks of the privacy mechanisms");
  verify->add_option("--samples", o.samples, "Draws per check (>= 10000)");
  verify->add_option("--bound-convention", o.convention, "unbiased | literal");
  for (CLI::App* cmd : {run, cv, synth, verify}) {
    cmd->add_option("--seed", o.seed, "Base seed");
    cmd->add_option("--out", o.out, "Output path (default stdout)");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return do_run(o);
    if (cv->parsed()) return do_cv(o);
    if (synth->parsed()) return do_synth(o);
    if (verify->parsed()) return do_verify(o);
  } catch (const prestige::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
