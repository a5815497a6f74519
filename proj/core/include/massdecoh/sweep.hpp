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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "massdecoh/config.hpp"
#include "massdecoh/errors.hpp"

namespace massdecoh {

// One sweep point. `iterations` is empty except for Grover.
struct ResultRow {
  std::string experiment;
  std::string law;
  int size = 0;
  std::optional<int> iterations;
  double p_effective = 0.0;
  double metric = 0.0;
  double std_error = 0.0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::string backend;

  bool operator==(const ResultRow&) const = default;
};

// Raised when a sweep point fails; what() names the point.
class SweepError : public Error {
 public:
  using Error::Error;
};

inline constexpr const char* kWorkersEnv = "MASSDECOH_WORKERS";

// Stream seed for one sweep point, a hash of its labeled coordinates. Adding
// or removing points never changes the seed of another point.
std::uint64_t point_seed(std::uint64_t master, std::string_view experiment, std::string_view law, int size,
                         std::optional<int> iterations);

// MASSDECOH_WORKERS when set to a positive integer, else the hardware
// concurrency (at least 1).
unsigned default_worker_count();

// Runs every (law, size[, iterations]) point on up to `workers` threads
// (0 selects default_worker_count()). Rows come back sorted by
// (law, size, iterations) whatever the completion order.
std::vector<ResultRow> run_sweep(const SweepPlan& plan, unsigned workers = 0);

}  // namespace massdecoh
