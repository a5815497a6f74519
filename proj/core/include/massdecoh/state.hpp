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

// Dense statevector and density-operator engine.
//
// Basis convention: bit j of a basis index is qubit j, so qubit 0 is the
// least-significant bit. Bitstrings print qubit 0 rightmost, e.g. index 1 on
// three qubits is "001".

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "massdecoh/rng.hpp"

namespace massdecoh {

using Complex = std::complex<double>;

// Row-major 2x2 matrix: {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

inline constexpr int kMaxPureQubits = 16;
inline constexpr int kMaxMixedQubits = 10;

namespace gates {

struct H {
  int qubit;
};
struct X {
  int qubit;
};
struct Z {
  int qubit;
};
// diag(e^{-i angle/2}, e^{+i angle/2})
struct RZ {
  int qubit;
  double angle;
};
// pi/2 rotation about the equatorial axis (cos azimuth, sin azimuth, 0):
// (1/sqrt2) [[1, -i e^{-i azimuth}], [-i e^{i azimuth}, 1]].
struct EquatorialPulse {
  int qubit;
  double azimuth;
};
struct CNOT {
  int control;
  int target;
};
// Phase -1 on basis states where every listed qubit is 1.
struct MCZ {
  std::vector<int> qubits;
};

}  // namespace gates

using GateOp = std::variant<gates::H, gates::X, gates::Z, gates::RZ, gates::EquatorialPulse,
                            gates::CNOT, gates::MCZ>;

// 2x2 unitary of a single-qubit gate. Throws ParameterError for CNOT/MCZ.
Matrix2 gate_matrix(const GateOp& gate);

// Throws IndexError when the gate does not fit on n_qubits.
void validate_gate(const GateOp& gate, int n_qubits);

std::string describe(const GateOp& gate);

// Marks where a noise sweep injects dephasing. `qubits` lists the qubits
// eligible for a Z error at this point.
struct NoiseSite {
  std::vector<int> qubits;
};

using CircuitOp = std::variant<GateOp, NoiseSite>;

class Circuit {
 public:
  explicit Circuit(int n_qubits);

  int num_qubits() const { return n_qubits_; }
  const std::vector<CircuitOp>& ops() const { return ops_; }
  std::size_t num_noise_sites() const;

  Circuit& add(GateOp gate);
  Circuit& add_noise_site(NoiseSite site);
  Circuit& append(const Circuit& other);

 private:
  int n_qubits_;
  std::vector<CircuitOp> ops_;
};

class PureState {
 public:
  // Amplitudes must have length 2^n_qubits and unit norm within 1e-9.
  PureState(int n_qubits, std::vector<Complex> amplitudes);

  int num_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t index) const { return amplitudes_[index]; }

  double norm() const;
  std::vector<double> probabilities() const;

  void apply(const GateOp& gate);
  // Applies Z to every qubit whose bit is set in mask.
  void apply_z_mask(std::uint64_t mask);

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

class MixedState {
 public:
  // Matrix is row-major 2^n x 2^n; must be Hermitian with unit trace.
  MixedState(int n_qubits, std::vector<Complex> matrix);

  int num_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return dim_; }
  const Complex& at(std::size_t row, std::size_t col) const { return matrix_[row * dim_ + col]; }
  std::span<const Complex> data() const { return matrix_; }

  Complex trace() const;
  std::vector<double> diagonal() const;
  // Largest |rho_rc - conj(rho_cr)|.
  double hermiticity_error() const;

  void apply(const GateOp& gate);
  // rho -> sum_k K rho K^dagger on one qubit.
  void apply_channel(std::span<const Matrix2> kraus, int target);

 private:
  int n_qubits_;
  std::size_t dim_;
  std::vector<Complex> matrix_;
};

// Histogram keyed by bitstring (qubit 0 rightmost).
using Counts = std::map<std::string, std::uint64_t>;

// Returns a Z mask for a NoiseSite; bit q set means apply Z to qubit q.
using NoiseResolver = std::function<std::uint64_t(const NoiseSite&)>;

PureState zero_state(int n_qubits);
PureState apply_gate(PureState state, const GateOp& gate);
PureState apply_circuit(PureState state, const Circuit& circuit, const NoiseResolver& resolver);
// Resolver that never applies noise.
NoiseResolver noiseless();

Counts sample_counts(const PureState& state, std::uint64_t shots, RngStream& rng);
// Same draws as sample_counts, keyed by basis index.
std::map<std::uint64_t, std::uint64_t> sample_index_counts(const PureState& state, std::uint64_t shots,
                                                           RngStream& rng);

MixedState dm_from_pure(const PureState& state);
MixedState dm_apply_gate(MixedState state, const GateOp& gate);
MixedState dm_apply_channel(MixedState state, std::span<const Matrix2> kraus, int target);

// Throws ChannelError unless sum_k K^dagger K = I within tol.
void check_kraus_completeness(std::span<const Matrix2> kraus, double tol = 1e-12);

std::string bitstring(std::uint64_t index, int n_qubits);
// Keeps only the listed qubits; output bitstrings have qubits[0] rightmost.
Counts marginalize(const Counts& counts, std::span<const int> qubits);

// sum_b (-1)^{popcount b} count(b) / total. Throws InputError when empty.
double parity_expectation(const Counts& counts);
// <Z...Z> over all qubits, from the computational-basis populations.
double parity_expectation(const MixedState& state);

}  // namespace massdecoh
