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

#include <cstdint>
#include <filesystem>
#include <vector>

#include "massdecoh/config.hpp"

namespace massdecoh {

struct ReproduceOptions {
  std::uint64_t seed = 42;
  std::filesystem::path out_dir = ".";
  unsigned workers = 0;
};

struct ReproducedFigure {
  SweepPlan plan;
  std::filesystem::path csv;
  std::filesystem::path chart;
};

// The three standard sweeps with default parameters: GHZ n = 2..8, branch
// m = 0..12, Grover n in {3,4,5} x t = 1..7; power law against the matched
// constant baseline, 2000 shots, trajectory backend.
std::vector<SweepPlan> standard_plans(std::uint64_t seed);

// Runs standard_plans and writes fig2_ghz_parity, fig3_branch_mass and
// fig4_grover as .csv and .svg under out_dir (created if missing).
std::vector<ReproducedFigure> reproduce(const ReproduceOptions& options);

}  // namespace massdecoh
