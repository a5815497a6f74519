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

// Closed-form predictions used as ground truth for the engine. Each Z error
// on any qubit of a two-branch superposition flips the relative sign of the
// branches, so independent per-qubit dephasing scales the coherence by
// (1 - 2p) per exposed qubit.

#include "massdecoh/noise.hpp"

namespace massdecoh {

enum class Derivation { kGhzClosedForm, kBranchClosedForm, kGroverNoiseless };

struct Prediction {
  double metric = 0.0;
  Derivation derivation = Derivation::kGhzClosedForm;
};

// (1 - 2 p(n))^n.
Prediction predict_ghz_visibility(const NoiseSpec& spec, int n);

// (1 - 2 p(m))^m for kBranchAncillasOnly, (1 - 2 p(m))^(m+1) for kAllQubits.
// For the constant law p(m) = p0.
Prediction predict_branch_visibility(const NoiseSpec& spec, int m);

// sin^2((2t + 1) asin(2^{-n/2})).
Prediction grover_noiseless_success(int n, int iterations);

}  // namespace massdecoh
