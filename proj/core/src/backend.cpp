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

#include "massdecoh/backend.hpp"

#include <bit>
#include <map>
#include <vector>

#include "massdecoh/errors.hpp"
#include "massdecoh/noise.hpp"

namespace massdecoh {
namespace {

using IndexCounts = std::map<std::uint64_t, std::uint64_t>;

// Sign pattern a Z mask imprints on the state's support: bit i is the parity
// of support[i] & mask. Equal signatures give identical post-noise states.
std::vector<std::uint64_t> signature(const std::vector<std::uint64_t>& support, std::uint64_t mask) {
  std::vector<std::uint64_t> sig((support.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (std::popcount(support[i] & mask) & 1) sig[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return sig;
}

void run_group(PureState state, const Circuit& circuit, std::size_t op_index, std::uint64_t shots, double p,
               RngStream& rng, IndexCounts& histogram) {
  const auto& ops = circuit.ops();
  for (std::size_t i = op_index; i < ops.size(); ++i) {
    if (const auto* gate = std::get_if<GateOp>(&ops[i])) {
      state.apply(*gate);
      continue;
    }
    const auto& site = std::get<NoiseSite>(ops[i]);
    if (p == 0.0 || site.qubits.empty()) continue;

    std::vector<std::uint64_t> support;
    for (std::size_t x = 0; x < state.dimension(); ++x) {
      if (state[x] != Complex{0.0}) support.push_back(x);
    }
    struct Group {
      std::uint64_t mask;
      std::uint64_t shots;
    };
    std::map<std::vector<std::uint64_t>, Group> groups;
    for (std::uint64_t s = 0; s < shots; ++s) {
      const std::uint64_t mask = sample_z_mask(site, p, rng);
      auto [it, inserted] = groups.try_emplace(signature(support, mask), Group{mask, 0});
      ++it->second.shots;
    }
    for (const auto& [sig, group] : groups) {
      PureState branch = state;
      branch.apply_z_mask(group.mask);
      run_group(std::move(branch), circuit, i + 1, group.shots, p, rng, histogram);
    }
    return;
  }
  for (const auto& [index, n] : sample_index_counts(state, shots, rng)) histogram[index] += n;
}

}  // namespace

std::string backend_label(Backend backend) {
  return backend == Backend::kExact ? "exact" : "trajectory";
}

Counts sample_trajectories(const Circuit& circuit, double p, std::uint64_t shots, RngStream& rng) {
  return sample_trajectories(zero_state(circuit.num_qubits()), circuit, p, shots, rng);
}

Counts sample_trajectories(const PureState& initial, const Circuit& circuit, double p, std::uint64_t shots,
                           RngStream& rng) {
  if (circuit.num_qubits() != initial.num_qubits()) throw ShapeError("circuit and state widths differ");
  if (shots == 0) throw ParameterError("shots must be at least 1");
  static_cast<void>(DephasingChannel{p});  // range check
  IndexCounts histogram;
  run_group(initial, circuit, 0, shots, p, rng, histogram);
  Counts counts;
  for (const auto& [index, n] : histogram) counts[bitstring(index, circuit.num_qubits())] = n;
  return counts;
}

MixedState evolve_exact(const Circuit& circuit, double p) {
  if (circuit.num_qubits() > kMaxMixedQubits) {
    throw SizeError("exact backend supports at most " + std::to_string(kMaxMixedQubits) + " qubits, circuit has " +
                    std::to_string(circuit.num_qubits()));
  }
  return evolve_exact(dm_from_pure(zero_state(circuit.num_qubits())), circuit, p);
}

MixedState evolve_exact(MixedState rho, const Circuit& circuit, double p) {
  if (circuit.num_qubits() != rho.num_qubits()) throw ShapeError("circuit and state widths differ");
  const std::vector<Matrix2> kraus = phase_flip_kraus(p);
  for (const CircuitOp& op : circuit.ops()) {
    if (const auto* gate = std::get_if<GateOp>(&op)) {
      rho.apply(*gate);
    } else if (p > 0.0) {
      for (int q : std::get<NoiseSite>(op).qubits) rho.apply_channel(kraus, q);
    }
  }
  return rho;
}

}  // namespace massdecoh
