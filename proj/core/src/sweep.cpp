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

#include "massdecoh/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <tuple>

#include "massdecoh/protocols.hpp"

namespace massdecoh {
namespace {

struct Point {
  const LabeledNoise* law;
  int size;
  std::optional<int> iterations;
};

std::string describe(const SweepPlan& plan, const Point& point) {
  std::string s = experiment_label(plan.experiment) + " law=" + point.law->label + " size=" + std::to_string(point.size);
  if (point.iterations) s += " iterations=" + std::to_string(*point.iterations);
  return s;
}

ResultRow evaluate(const SweepPlan& plan, const Point& point) {
  ResultRow row;
  row.experiment = experiment_label(plan.experiment);
  row.law = point.law->label;
  row.size = point.size;
  row.iterations = point.iterations;
  row.seed = point_seed(plan.seed, row.experiment, row.law, row.size, row.iterations);
  row.backend = backend_label(plan.backend);
  row.shots = plan.backend == Backend::kExact ? 0 : plan.shots;

  ExperimentConfig config;
  config.noise = point.law->spec;
  config.phase_points = plan.phase_points;
  config.shots = plan.shots;
  config.seed = row.seed;
  config.backend = plan.backend;

  switch (plan.experiment) {
    case Experiment::kGhz: {
      config.kind = GhzParity{point.size};
      const VisibilityResult r = run_ghz_parity(config);
      row.p_effective = r.p_effective;
      row.metric = r.visibility;
      row.std_error = r.std_error;
      break;
    }
    case Experiment::kBranch: {
      config.kind = BranchMass{point.size};
      const VisibilityResult r = run_branch(config);
      row.p_effective = r.p_effective;
      row.metric = r.visibility;
      row.std_error = r.std_error;
      break;
    }
    case Experiment::kGrover: {
      config.kind = Grover{point.size, *point.iterations};
      const SuccessResult r = run_grover(config);
      row.p_effective = r.p_effective;
      row.metric = r.success;
      row.std_error = r.std_error;
      break;
    }
  }
  return row;
}

}  // namespace

std::uint64_t point_seed(std::uint64_t master, std::string_view experiment, std::string_view law, int size,
                         std::optional<int> iterations) {
  std::string key(experiment);
  key += '|';
  key += law;
  key += '|';
  key += std::to_string(size);
  key += '|';
  key += iterations ? std::to_string(*iterations) : std::string("-");
  return derive_seed(master, key);
}

unsigned default_worker_count() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<ResultRow> run_sweep(const SweepPlan& plan, unsigned workers) {
  std::vector<Point> points;
  for (const LabeledNoise& law : plan.laws) {
    for (int size : plan.sizes) {
      if (plan.experiment == Experiment::kGrover) {
        for (int t : plan.iterations) points.push_back({&law, size, t});
      } else {
        points.push_back({&law, size, std::nullopt});
      }
    }
  }

  std::vector<ResultRow> rows(points.size());
  std::vector<std::exception_ptr> failures(points.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        rows[i] = evaluate(plan, points[i]);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  if (workers == 0) workers = default_worker_count();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(points.size(), 1)));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!failures[i]) continue;
    try {
      std::rethrow_exception(failures[i]);
    } catch (const std::exception& e) {
      throw SweepError("sweep point " + describe(plan, points[i]) + " failed: " + e.what());
    }
  }

  std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return std::tie(a.law, a.size, a.iterations) < std::tie(b.law, b.size, b.iterations);
  });
  return rows;
}

}  // namespace massdecoh
