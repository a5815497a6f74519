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

// The three experiment protocols: GHZ parity scans, branch-mass
// interference, and Grover search, each under a configurable dephasing law.

#include <cstdint>
#include <variant>
#include <vector>

#include "massdecoh/backend.hpp"
#include "massdecoh/noise.hpp"
#include "massdecoh/state.hpp"

namespace massdecoh {

struct GhzParity {
  int n = 2;
};

// m ancillas fanned out from control qubit 0.
struct BranchMass {
  int m = 0;
};

struct Grover {
  int n = 3;
  int iterations = 1;
};

using ExperimentKind = std::variant<GhzParity, BranchMass, Grover>;

inline constexpr int kDefaultPhasePoints = 64;
inline constexpr std::uint64_t kDefaultShots = 2000;

struct ExperimentConfig {
  ExperimentKind kind = GhzParity{};
  NoiseSpec noise = NoiseSpec::noiseless();
  int phase_points = kDefaultPhasePoints;
  std::uint64_t shots = kDefaultShots;
  std::uint64_t seed = 0;
  Backend backend = Backend::kTrajectory;

  // Ranges: GHZ 2 <= n <= 12; branch 0 <= m <= 12; Grover 3 <= n <= 5 and
  // 0 <= t <= 7; phase_points > 2 * harmonic; shots >= 1. Throws SizeError or
  // SamplingError or ParameterError.
  void validate() const;
};

struct ParityCurve {
  std::vector<double> phases;
  std::vector<double> parity;
  std::vector<double> std_error;
};

struct VisibilityResult {
  ParityCurve curve;
  double visibility = 0.0;
  double std_error = 0.0;
  double p_effective = 0.0;
};

struct SuccessResult {
  double success = 0.0;
  double std_error = 0.0;
  double p_effective = 0.0;
};

// phi_j = 2 pi j / points, j = 0..points-1.
std::vector<double> phase_grid(int points);

// H(0), CNOT chain, NoiseSite on every qubit.
Circuit build_ghz(int n);

// H(0), CNOT(0,1..m), NoiseSite (ancillas 1..m, or every qubit for
// kAllQubits), CNOT(0,m..1), RZ(0, phase), H(0). Control is qubit 0.
Circuit build_branch(int m, NoiseScope scope = NoiseScope::kBranchAncillasOnly, double phase = 0.0);

// Uniform superposition, then t rounds of oracle MCZ, diffusion and a
// per-iteration NoiseSite on every qubit. Marked state is |1...1>.
Circuit build_grover(int n, int iterations);

VisibilityResult run_ghz_parity(const ExperimentConfig& config);
VisibilityResult run_branch(const ExperimentConfig& config);
SuccessResult run_grover(const ExperimentConfig& config);

enum class VisibilityEstimator {
  kFourier,     // 2 |(1/M) sum_j parity_j e^{-i h phi_j}|
  kPeakToPeak,  // (max - min) / 2; biased upward by shot noise
};

// Throws SamplingError unless the curve has more than 2 * harmonic points.
double visibility_from_curve(const ParityCurve& curve, int harmonic,
                             VisibilityEstimator estimator = VisibilityEstimator::kFourier);

// Standard error of the Fourier estimator, propagating independent
// per-point errors through the real and imaginary parts.
double visibility_std_error(const ParityCurve& curve, int harmonic);

// sqrt((1 - parity^2) / shots)
double parity_std_error(double parity, std::uint64_t shots);

}  // namespace massdecoh
