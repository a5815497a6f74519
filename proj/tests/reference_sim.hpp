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

// Test-only dense reference: every gate becomes an explicit 2^n x 2^n matrix
// built from Kronecker products and is applied by a full matrix-vector
// product. Independent of the strided kernels it checks.

#include <complex>
#include <random>
#include <vector>

#include "massdecoh/state.hpp"

namespace massdecoh::testing {

using Dense = std::vector<std::vector<Complex>>;

inline Dense identity(std::size_t d) {
  Dense m(d, std::vector<Complex>(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1.0;
  return m;
}

inline Dense kron(const Dense& a, const Dense& b) {
  const std::size_t ra = a.size(), rb = b.size();
  Dense m(ra * rb, std::vector<Complex>(ra * rb, 0.0));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ra; ++j)
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < rb; ++l) m[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
  return m;
}

// Single-qubit u on qubit q of n (qubit 0 is the rightmost Kronecker factor).
inline Dense embed(const Dense& u, int q, int n) {
  Dense m = {{1.0}};
  for (int k = n - 1; k >= 0; --k) m = kron(m, k == q ? u : identity(2));
  return m;
}

inline Dense to_dense(const Matrix2& u) { return {{u[0], u[1]}, {u[2], u[3]}}; }

// Permutation / diagonal built by enumerating basis states.
inline Dense dense_gate(const GateOp& gate, int n) {
  const std::size_t d = std::size_t{1} << n;
  if (const auto* g = std::get_if<gates::CNOT>(&gate)) {
    Dense m(d, std::vector<Complex>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t j = ((i >> g->control) & 1) ? i ^ (std::size_t{1} << g->target) : i;
      m[j][i] = 1.0;
    }
    return m;
  }
  if (const auto* g = std::get_if<gates::MCZ>(&gate)) {
    Dense m = identity(d);
    for (std::size_t i = 0; i < d; ++i) {
      bool all = true;
      for (int q : g->qubits) all = all && ((i >> q) & 1);
      if (all) m[i][i] = -1.0;
    }
    return m;
  }
  const int q = std::visit(
      [](const auto& g) -> int {
        if constexpr (requires { g.qubit; }) return g.qubit;
        return -1;
      },
      gate);
  return embed(to_dense(gate_matrix(gate)), q, n);
}

inline std::vector<Complex> matvec(const Dense& m, std::span<const Complex> v) {
  std::vector<Complex> out(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline std::vector<Complex> random_amplitudes(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> v(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : v) {
    a = {gauss(rng), gauss(rng)};
    norm += std::norm(a);
  }
  for (auto& a : v) a /= std::sqrt(norm);
  return v;
}

inline PureState random_state(int n, std::mt19937_64& rng) { return PureState(n, random_amplitudes(n, rng)); }

// Random mixture of a few random pure states.
inline MixedState random_mixed(int n, std::mt19937_64& rng) {
  const std::size_t d = std::size_t{1} << n;
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<Complex> rho(d * d, 0.0);
  const int terms = 3;
  std::vector<double> w(terms);
  double total = 0.0;
  for (double& x : w) total += (x = uni(rng) + 0.05);
  for (int t = 0; t < terms; ++t) {
    const auto psi = random_amplitudes(n, rng);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) rho[r * d + c] += (w[t] / total) * psi[r] * std::conj(psi[c]);
  }
  // Re-symmetrize away rounding so the constructor's checks see an exact
  // Hermitian matrix.
  for (std::size_t r = 0; r < d; ++r) {
    rho[r * d + r] = rho[r * d + r].real();
    for (std::size_t c = r + 1; c < d; ++c) rho[c * d + r] = std::conj(rho[r * d + c]);
  }
  return MixedState(n, std::move(rho));
}

inline GateOp random_gate(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick_q(0, n - 1);
  std::uniform_real_distribution<double> angle(-6.3, 6.3);
  const int kind = std::uniform_int_distribution<int>(0, n >= 2 ? 6 : 4)(rng);
  const int q = pick_q(rng);
  switch (kind) {
    case 0:
      return gates::H{q};
    case 1:
      return gates::X{q};
    case 2:
      return gates::Z{q};
    case 3:
      return gates::RZ{q, angle(rng)};
    case 4:
      return gates::EquatorialPulse{q, angle(rng)};
    case 5: {
      int t = pick_q(rng);
      while (t == q) t = pick_q(rng);
      return gates::CNOT{q, t};
    }
    default: {
      std::vector<int> qs;
      for (int k = 0; k < n; ++k)
        if (k == q || std::bernoulli_distribution(0.5)(rng)) qs.push_back(k);
      return gates::MCZ{qs};
    }
  }
}

}  // namespace massdecoh::testing
