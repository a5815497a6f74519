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

// Dephasing channel algebra and the scaling laws that map a "mass" proxy
// (qubit count or branch size) to a per-qubit Z-error probability.

#include <string>
#include <variant>
#include <vector>

#include "massdecoh/rng.hpp"
#include "massdecoh/state.hpp"

namespace massdecoh {

// Mass-independent baseline.
struct ConstantLaw {
  double p0 = 0.08;
};

// p(size) = k * size^alpha, clamped.
struct PowerLaw {
  double k = 0.02;
  double alpha = 2.0;
};

// p(size) = 1 - exp(-k * size^alpha), clamped.
struct ExpSaturatingLaw {
  double k = 0.02;
  double alpha = 2.0;
};

using NoiseLaw = std::variant<ConstantLaw, PowerLaw, ExpSaturatingLaw>;

enum class NoiseSiteKind { kAfterPrep, kPerIteration };
enum class NoiseScope { kAllQubits, kBranchAncillasOnly };

// Ceiling of every dephasing probability. Past 0.5 the off-diagonal factor
// 1 - 2p turns negative and grows in magnitude again.
inline constexpr double kMaxDephasing = 0.5;

struct NoiseSpec {
  NoiseLaw law = ConstantLaw{0.0};
  NoiseSiteKind site = NoiseSiteKind::kAfterPrep;
  NoiseScope scope = NoiseScope::kAllQubits;

  // Throws ParameterError unless p0 in [0, 0.5], k >= 0, alpha >= 0.
  void validate() const;

  static NoiseSpec noiseless() { return NoiseSpec{}; }
};

// "constant", "power" or "exp".
std::string law_label(const NoiseLaw& law);
bool is_mass_dependent(const NoiseLaw& law);

double noise_probability(const NoiseLaw& law, int size);
double noise_probability(const NoiseSpec& spec, int size);

class DephasingChannel {
 public:
  explicit DephasingChannel(double p);

  double p() const { return p_; }
  // Factor multiplying every coherence on the dephased qubit.
  double attenuation() const { return 1.0 - 2.0 * p_; }
  std::vector<Matrix2> kraus() const;

 private:
  double p_;
};

// {sqrt(1-p) I, sqrt(p) Z}. Throws ParameterError for p outside [0, 0.5].
std::vector<Matrix2> phase_flip_kraus(double p);

// lambda = 1 - (1-2p)^2, the phase-damping strength with the same coherence
// attenuation as a phase flip of probability p.
double phase_damping_lambda(double p);

// {[[1,0],[0,sqrt(1-lambda)]], [[0,0],[0,sqrt(lambda)]]}.
std::vector<Matrix2> phase_damping_kraus(double lambda);

// One draw of the phase-flip unraveling: true (apply Z) with probability p.
bool sample_z_action(double p, RngStream& rng);

// Z mask for one visit of a site: every listed qubit flips independently.
std::uint64_t sample_z_mask(const NoiseSite& site, double p, RngStream& rng);

// Resolver drawing independent Z errors with probability p at every site.
// Holds a reference to rng, which must outlive the resolver.
NoiseResolver dephasing_resolver(double p, RngStream& rng);

}  // namespace massdecoh
