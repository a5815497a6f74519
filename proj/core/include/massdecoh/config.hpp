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

#pragma once

// Flat key=value sweep configuration.
//
//   experiment=ghz|branch|grover   (required)
//   law=power,constant             comma list of constant|power|exp|none
//   k=0.02 alpha=2.0               mass-law strength and exponent
//   p0=0.08                        constant-law probability; defaults to the
//                                  power law at size 2
//   sizes=2..8                     ranges and comma lists, e.g. 2..4,7
//   iterations=1..7                Grover only
//   shots=2000 phase_points=64 seed=0 backend=trajectory|exact
//
// Pairs are separated by whitespace or newlines; '#' starts a comment.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "massdecoh/backend.hpp"
#include "massdecoh/noise.hpp"

namespace massdecoh {

enum class Experiment { kGhz, kBranch, kGrover };

std::string experiment_label(Experiment experiment);

struct LabeledNoise {
  std::string label;
  NoiseSpec spec;
};

struct SweepPlan {
  Experiment experiment = Experiment::kGhz;
  std::vector<int> sizes;
  std::vector<int> iterations;
  std::vector<LabeledNoise> laws;
  std::uint64_t shots = 2000;
  int phase_points = 64;
  std::uint64_t seed = 0;
  Backend backend = Backend::kTrajectory;

  std::size_t num_points() const;
};

inline constexpr double kDefaultK = 0.02;
inline constexpr double kDefaultAlpha = 2.0;

using ConfigEntries = std::map<std::string, std::string>;

// Splits text into entries. Throws ConfigError on unknown keys or pairs
// without '='. A repeated key keeps its last value.
ConfigEntries parse_config_entries(std::string_view text);

// Fills defaults and validates. Throws ConfigError naming the offending key.
SweepPlan build_plan(const ConfigEntries& entries);

SweepPlan parse_config(std::string_view text);

// "2..8", "3,4,5", "0..2,9". Throws ConfigError naming key.
std::vector<int> parse_int_list(const std::string& key, std::string_view value);

// Noise spec for one law label, with scope and site set by the experiment.
NoiseSpec make_noise_spec(Experiment experiment, std::string_view law, double k, double alpha, double p0);

const std::vector<std::string>& config_keys();

}  // namespace massdecoh
