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

// Two execution backends for circuits containing NoiseSites.
//
// Trajectory: every shot is an independent pure-state run in which each qubit
// listed at a NoiseSite receives Z with probability p. Shots whose sampled Z
// patterns act identically on the current state are simulated once and
// sampled together, which keeps GHZ-like states with thousands of shots cheap
// without changing the output distribution.
//
// Exact: density-operator evolution applying the phase-flip channel to each
// listed qubit at every NoiseSite.

#include <cstdint>

#include "massdecoh/rng.hpp"
#include "massdecoh/state.hpp"

namespace massdecoh {

enum class Backend { kTrajectory, kExact };

std::string backend_label(Backend backend);

Counts sample_trajectories(const Circuit& circuit, double p, std::uint64_t shots, RngStream& rng);
Counts sample_trajectories(const PureState& initial, const Circuit& circuit, double p, std::uint64_t shots,
                           RngStream& rng);

MixedState evolve_exact(const Circuit& circuit, double p);
MixedState evolve_exact(MixedState initial, const Circuit& circuit, double p);

}  // namespace massdecoh
