// Copyright 2026 The massdecoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// massdecoh: run dephasing sweeps from the command line.
//
//   massdecoh ghz --sizes 2..8 --law power,constant --out ghz.csv --chart ghz.svg
//   massdecoh branch --config branch.cfg --backend exact
//   massdecoh grover --sizes 3,4,5 --iterations 1..7
//   massdecoh reproduce --seed 42 --out-dir results
//   massdecoh predict --experiment ghz --sizes 2..8
//
// Exit codes: 0 success, 1 configuration error, 2 engine or I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "massdecoh/chart.hpp"
#include "massdecoh/config.hpp"
#include "massdecoh/csv.hpp"
#include "massdecoh/errors.hpp"
#include "massdecoh/oracle.hpp"
#include "massdecoh/reproduce.hpp"
#include "massdecoh/sweep.hpp"

namespace {

using massdecoh::ConfigEntries;

constexpr int kExitConfig = 1;
constexpr int kExitEngine = 2;

// Flag values that override config-file entries.
struct SweepFlags {
  std::string config_path;
  std::map<std::string, std::string> overrides;
  std::string out_path;
  std::string chart_path;
  unsigned workers = 0;
};

void add_config_flags(CLI::App* cmd, SweepFlags& flags, bool with_iterations) {
  cmd->add_option("--config", flags.config_path, "Config file of key=value pairs");
  auto add = [&](const std::string& names, const std::string& key, const std::string& help) {
    cmd->add_option_function<std::string>(
        names, [&flags, key](const std::string& v) { flags.overrides[key] = v; }, help);
  };
  add("--law", "law", "Comma list of constant, power, exp, none [power,constant]");
  add("--k", "k", "Mass-law strength [0.02]");
  add("--alpha", "alpha", "Mass-law exponent [2.0]");
  add("--p0", "p0", "Constant-law probability [power law at size 2]");
  add("--sizes", "sizes", "Sizes, e.g. 2..8 or 3,4,5");
  if (with_iterations) add("--iterations", "iterations", "Grover iterations, e.g. 1..7");
  add("--shots", "shots", "Shots per point [2000]");
  add("--phase-points,--phase_points", "phase_points", "Phase grid size [64]");
  add("--seed", "seed", "Master seed [0]");
  add("--backend", "backend", "trajectory or exact [trajectory]");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw massdecoh::ConfigError("config", "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

massdecoh::SweepPlan plan_from(const SweepFlags& flags, const std::optional<std::string>& experiment) {
  ConfigEntries entries;
  if (!flags.config_path.empty()) entries = massdecoh::parse_config_entries(read_text(flags.config_path));
  for (const auto& [key, value] : flags.overrides) entries[key] = value;
  if (experiment) entries["experiment"] = *experiment;
  return massdecoh::build_plan(entries);
}

void run_experiment(const SweepFlags& flags, const std::string& experiment) {
  const massdecoh::SweepPlan plan = plan_from(flags, experiment);
  const auto rows = massdecoh::run_sweep(plan, flags.workers);
  if (flags.out_path.empty()) {
    std::cout << massdecoh::format_csv(rows);
  } else {
    massdecoh::write_csv(rows, flags.out_path);
  }
  if (!flags.chart_path.empty()) massdecoh::emit_chart(rows, flags.chart_path);
}

void run_predict(const SweepFlags& flags) {
  const massdecoh::SweepPlan plan = plan_from(flags, std::nullopt);
  std::cout << "experiment,law,size,iterations,prediction\n";
  auto print = [](const std::string& experiment, const std::string& law, int size, const std::string& iterations,
                  double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    std::cout << experiment << ',' << law << ',' << size << ',' << iterations << ',' << buf << '\n';
  };
  const std::string label = massdecoh::experiment_label(plan.experiment);
  if (plan.experiment == massdecoh::Experiment::kGrover) {
    // Only the noiseless case has a closed form.
    for (int n : plan.sizes) {
      for (int t : plan.iterations) print(label, "none", n, std::to_string(t), massdecoh::grover_noiseless_success(n, t).metric);
    }
    return;
  }
  for (const auto& law : plan.laws) {
    for (int size : plan.sizes) {
      const double value = plan.experiment == massdecoh::Experiment::kGhz
                               ? massdecoh::predict_ghz_visibility(law.spec, size).metric
                               : massdecoh::predict_branch_visibility(law.spec, size).metric;
      print(label, law.label, size, "", value);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mass-dependent dephasing sweeps: GHZ parity, branch mass, Grover search"};
  app.require_subcommand(1);

  const unsigned default_workers = massdecoh::default_worker_count();

  std::map<std::string, SweepFlags> experiment_flags;
  for (const std::string name : {"ghz", "branch", "grover"}) {
    SweepFlags& flags = experiment_flags[name];
    flags.workers = default_workers;
    CLI::App* cmd = app.add_subcommand(name, "Run a " + name + " sweep and print or write CSV");
    add_config_flags(cmd, flags, name == "grover");
    cmd->add_option("--out,-o", flags.out_path, "CSV destination (stdout when omitted)");
    cmd->add_option("--chart", flags.chart_path, "SVG chart destination");
    cmd->add_option("--workers", flags.workers, "Worker threads (env MASSDECOH_WORKERS)");
  }

  massdecoh::ReproduceOptions reproduce_options;
  reproduce_options.out_dir = "results";
  reproduce_options.workers = default_workers;
  std::string out_dir = "results";
  CLI::App* reproduce_cmd = app.add_subcommand("reproduce", "Run all three standard sweeps and write CSV + SVG");
  reproduce_cmd->add_option("--seed", reproduce_options.seed, "Master seed [42]");
  reproduce_cmd->add_option("--out-dir", out_dir, "Output directory [results]");
  reproduce_cmd->add_option("--workers", reproduce_options.workers, "Worker threads (env MASSDECOH_WORKERS)");

  SweepFlags predict_flags;
  std::string predict_experiment;
  CLI::App* predict_cmd = app.add_subcommand("predict", "Print closed-form predictions");
  predict_cmd->add_option("--experiment", predict_experiment, "ghz, branch or grover")->required();
  add_config_flags(predict_cmd, predict_flags, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    for (auto& [name, flags] : experiment_flags) {
      if (app.got_subcommand(name)) run_experiment(flags, name);
    }
    if (*reproduce_cmd) {
      reproduce_options.out_dir = out_dir;
      for (const auto& fig : massdecoh::reproduce(reproduce_options)) {
        std::cout << "wrote " << fig.csv.string() << " and " << fig.chart.string() << '\n';
      }
    }
    if (*predict_cmd) {
      predict_flags.overrides["experiment"] = predict_experiment;
      run_predict(predict_flags);
    }
  } catch (const massdecoh::ConfigError& e) {
    std::cerr << "massdecoh: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "massdecoh: " << e.what() << '\n';
    return kExitEngine;
  }
  return 0;
}
