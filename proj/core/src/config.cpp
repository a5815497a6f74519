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

#include "massdecoh/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>

#include "massdecoh/errors.hpp"

namespace massdecoh {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <class T>
T parse_number(const std::string& key, std::string_view text) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ConfigError(key, "cannot parse '" + std::string(text) + "' as a number");
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) throw ConfigError(key, "value must be finite");
  }
  return value;
}

std::string lookup(const ConfigEntries& entries, const std::string& key, const std::string& fallback) {
  const auto it = entries.find(key);
  return it == entries.end() ? fallback : it->second;
}

void check_range(const std::string& key, const std::vector<int>& values, int lo, int hi) {
  for (int v : values) {
    if (v < lo || v > hi) {
      throw ConfigError(key, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
    }
  }
}

}  // namespace

std::string experiment_label(Experiment experiment) {
  switch (experiment) {
    case Experiment::kGhz:
      return "ghz";
    case Experiment::kBranch:
      return "branch";
    case Experiment::kGrover:
      return "grover";
  }
  return "unknown";
}

std::size_t SweepPlan::num_points() const {
  const std::size_t per_law = experiment == Experiment::kGrover ? sizes.size() * iterations.size() : sizes.size();
  return per_law * laws.size();
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {"experiment", "law",  "k",            "alpha", "p0",     "sizes",
                                                "iterations", "shots", "phase_points", "seed",  "backend"};
  return keys;
}

ConfigEntries parse_config_entries(std::string_view text) {
  ConfigEntries entries;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i == line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      const std::string_view token = line.substr(i, j - i);
      i = j;
      const auto eq = token.find('=');
      if (eq == std::string_view::npos) throw ConfigError(std::string(token), "expected key=value");
      std::string key(token.substr(0, eq));
      const auto& keys = config_keys();
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw ConfigError(key, "unknown key");
      entries[key] = std::string(token.substr(eq + 1));
    }
  }
  return entries;
}

std::vector<int> parse_int_list(const std::string& key, std::string_view value) {
  std::vector<int> out;
  if (trim(value).empty()) throw ConfigError(key, "empty list");
  for (std::string_view part : split(value, ',')) {
    if (part.empty()) throw ConfigError(key, "empty list element");
    if (const auto dots = part.find(".."); dots != std::string_view::npos) {
      const int lo = parse_number<int>(key, trim(part.substr(0, dots)));
      const int hi = parse_number<int>(key, trim(part.substr(dots + 2)));
      if (hi < lo) throw ConfigError(key, "descending range '" + std::string(part) + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(parse_number<int>(key, part));
    }
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw ConfigError(key, "repeated value");
  return out;
}

NoiseSpec make_noise_spec(Experiment experiment, std::string_view law, double k, double alpha, double p0) {
  NoiseSpec spec;
  if (law == "power") {
    spec.law = PowerLaw{k, alpha};
  } else if (law == "exp") {
    spec.law = ExpSaturatingLaw{k, alpha};
  } else if (law == "constant") {
    spec.law = ConstantLaw{p0};
  } else if (law == "none") {
    spec.law = ConstantLaw{0.0};
  } else {
    throw ConfigError("law", "unknown law '" + std::string(law) + "' (expected constant, power, exp or none)");
  }
  spec.site = experiment == Experiment::kGrover ? NoiseSiteKind::kPerIteration : NoiseSiteKind::kAfterPrep;
  // Mass laws dephase only the heavy branch; baselines act on every qubit.
  spec.scope = (experiment == Experiment::kBranch && is_mass_dependent(spec.law)) ? NoiseScope::kBranchAncillasOnly
                                                                                  : NoiseScope::kAllQubits;
  return spec;
}

SweepPlan build_plan(const ConfigEntries& entries) {
  SweepPlan plan;

  const auto shots = parse_number<long long>("shots", lookup(entries, "shots", "2000"));
  if (shots < 1) throw ConfigError("shots", "must be >= 1");
  if (shots > 100'000'000) throw ConfigError("shots", "must be <= 100000000");
  plan.shots = static_cast<std::uint64_t>(shots);

  const std::string experiment = lookup(entries, "experiment", "");
  if (experiment == "ghz") {
    plan.experiment = Experiment::kGhz;
  } else if (experiment == "branch") {
    plan.experiment = Experiment::kBranch;
  } else if (experiment == "grover") {
    plan.experiment = Experiment::kGrover;
  } else if (experiment.empty()) {
    throw ConfigError("experiment", "missing (expected ghz, branch or grover)");
  } else {
    throw ConfigError("experiment", "unknown experiment '" + experiment + "'");
  }

  const double k = parse_number<double>("k", lookup(entries, "k", "0.02"));
  const double alpha = parse_number<double>("alpha", lookup(entries, "alpha", "2.0"));
  if (k < 0.0) throw ConfigError("k", "must be >= 0");
  if (alpha < 0.0) throw ConfigError("alpha", "must be >= 0");
  // The baseline matches the power law at size 2 unless given explicitly.
  double p0 = noise_probability(PowerLaw{k, alpha}, 2);
  if (entries.count("p0")) p0 = parse_number<double>("p0", entries.at("p0"));
  if (p0 < 0.0 || p0 > kMaxDephasing) throw ConfigError("p0", "must lie in [0, 0.5]");

  std::set<std::string> seen_laws;
  const std::string law_list = lookup(entries, "law", "power,constant");
  for (std::string_view law : split(law_list, ',')) {
    if (!seen_laws.insert(std::string(law)).second) throw ConfigError("law", "repeated law '" + std::string(law) + "'");
    plan.laws.push_back({std::string(law), make_noise_spec(plan.experiment, law, k, alpha, p0)});
  }

  switch (plan.experiment) {
    case Experiment::kGhz:
      plan.sizes = parse_int_list("sizes", lookup(entries, "sizes", "2..8"));
      check_range("sizes", plan.sizes, 2, 12);
      break;
    case Experiment::kBranch:
      plan.sizes = parse_int_list("sizes", lookup(entries, "sizes", "0..12"));
      check_range("sizes", plan.sizes, 0, 12);
      break;
    case Experiment::kGrover:
      plan.sizes = parse_int_list("sizes", lookup(entries, "sizes", "3,4,5"));
      check_range("sizes", plan.sizes, 3, 5);
      plan.iterations = parse_int_list("iterations", lookup(entries, "iterations", "1..7"));
      check_range("iterations", plan.iterations, 0, 7);
      break;
  }
  if (plan.experiment != Experiment::kGrover && entries.count("iterations")) {
    throw ConfigError("iterations", "only applies to experiment=grover");
  }

  plan.phase_points = parse_number<int>("phase_points", lookup(entries, "phase_points", "64"));
  const int harmonic = plan.experiment == Experiment::kGhz ? plan.sizes.back() : 1;
  if (plan.experiment != Experiment::kGrover && plan.phase_points <= 2 * harmonic) {
    throw ConfigError("phase_points", "must exceed " + std::to_string(2 * harmonic) + " to resolve harmonic " +
                                          std::to_string(harmonic));
  }
  if (plan.phase_points > 100'000) throw ConfigError("phase_points", "must be <= 100000");

  plan.seed = parse_number<std::uint64_t>("seed", lookup(entries, "seed", "0"));

  const std::string backend = lookup(entries, "backend", "trajectory");
  if (backend == "trajectory") {
    plan.backend = Backend::kTrajectory;
  } else if (backend == "exact") {
    plan.backend = Backend::kExact;
  } else {
    throw ConfigError("backend", "unknown backend '" + backend + "' (expected trajectory or exact)");
  }
  return plan;
}

SweepPlan parse_config(std::string_view text) { return build_plan(parse_config_entries(text)); }

}  // namespace massdecoh
