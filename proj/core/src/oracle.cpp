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

#include "massdecoh/oracle.hpp"

#include <cmath>

#include "massdecoh/errors.hpp"

namespace massdecoh {
namespace {

double attenuation_power(double p, int exposed) {
  if (exposed == 0) return 1.0;
  return std::pow(1.0 - 2.0 * p, exposed);
}

}  // namespace

Prediction predict_ghz_visibility(const NoiseSpec& spec, int n) {
  if (n < 2) throw SizeError("GHZ prediction needs n >= 2");
  return {attenuation_power(noise_probability(spec, n), n), Derivation::kGhzClosedForm};
}

Prediction predict_branch_visibility(const NoiseSpec& spec, int m) {
  if (m < 0) throw SizeError("branch prediction needs m >= 0");
  const int exposed = spec.scope == NoiseScope::kAllQubits ? m + 1 : m;
  return {attenuation_power(noise_probability(spec, m), exposed), Derivation::kBranchClosedForm};
}

Prediction grover_noiseless_success(int n, int iterations) {
  if (n < 2) throw SizeError("Grover prediction needs n >= 2");
  if (iterations < 0) throw ParameterError("Grover prediction needs t >= 0");
  const double theta = std::asin(std::pow(2.0, -0.5 * n));
  const double amplitude = std::sin((2.0 * iterations + 1.0) * theta);
  return {amplitude * amplitude, Derivation::kGroverNoiseless};
}

}  // namespace massdecoh
