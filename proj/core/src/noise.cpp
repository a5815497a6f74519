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

#include "massdecoh/noise.hpp"

#include <algorithm>
#include <cmath>

#include "massdecoh/errors.hpp"

namespace massdecoh {
namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= kMaxDephasing)) {
    throw ParameterError("dephasing probability must lie in [0, 0.5], got " + std::to_string(p));
  }
}

double clamp_probability(double raw) {
  if (std::isnan(raw)) return kMaxDephasing;
  return std::clamp(raw, 0.0, kMaxDephasing);
}

}  // namespace

void NoiseSpec::validate() const {
  std::visit(
      [](const auto& law) {
        using T = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<T, ConstantLaw>) {
          if (!(law.p0 >= 0.0 && law.p0 <= kMaxDephasing)) throw ParameterError("p0 must lie in [0, 0.5]");
        } else {
          if (!(law.k >= 0.0) || !std::isfinite(law.k)) throw ParameterError("k must be finite and >= 0");
          if (!(law.alpha >= 0.0) || !std::isfinite(law.alpha)) throw ParameterError("alpha must be finite and >= 0");
        }
      },
      law);
}

std::string law_label(const NoiseLaw& law) {
  switch (law.index()) {
    case 0:
      return "constant";
    case 1:
      return "power";
    default:
      return "exp";
  }
}

bool is_mass_dependent(const NoiseLaw& law) { return !std::holds_alternative<ConstantLaw>(law); }

double noise_probability(const NoiseLaw& law, int size) {
  return std::visit(
      [size](const auto& l) -> double {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, ConstantLaw>) {
          return clamp_probability(l.p0);
        } else {
          // Zero mass never dephases, including the 0^0 corner.
          if (size <= 0) return 0.0;
          const double exposure = l.k * std::pow(static_cast<double>(size), l.alpha);
          if constexpr (std::is_same_v<T, PowerLaw>) {
            return clamp_probability(exposure);
          } else {
            return clamp_probability(-std::expm1(-exposure));
          }
        }
      },
      law);
}

double noise_probability(const NoiseSpec& spec, int size) { return noise_probability(spec.law, size); }

DephasingChannel::DephasingChannel(double p) : p_(p) { check_probability(p); }

std::vector<Matrix2> DephasingChannel::kraus() const { return phase_flip_kraus(p_); }

std::vector<Matrix2> phase_flip_kraus(double p) {
  check_probability(p);
  const double a = std::sqrt(1.0 - p);
  const double b = std::sqrt(p);
  return {Matrix2{a, 0.0, 0.0, a}, Matrix2{b, 0.0, 0.0, -b}};
}

double phase_damping_lambda(double p) {
  check_probability(p);
  const double attenuation = 1.0 - 2.0 * p;
  return 1.0 - attenuation * attenuation;
}

std::vector<Matrix2> phase_damping_kraus(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw ParameterError("phase damping lambda must lie in [0, 1]");
  return {Matrix2{1.0, 0.0, 0.0, std::sqrt(1.0 - lambda)}, Matrix2{0.0, 0.0, 0.0, std::sqrt(lambda)}};
}

bool sample_z_action(double p, RngStream& rng) {
  check_probability(p);
  return rng.bernoulli(p);
}

std::uint64_t sample_z_mask(const NoiseSite& site, double p, RngStream& rng) {
  std::uint64_t mask = 0;
  for (int q : site.qubits) {
    if (sample_z_action(p, rng)) mask |= std::uint64_t{1} << q;
  }
  return mask;
}

NoiseResolver dephasing_resolver(double p, RngStream& rng) {
  check_probability(p);
  return [p, &rng](const NoiseSite& site) { return sample_z_mask(site, p, rng); };
}

}  // namespace massdecoh
