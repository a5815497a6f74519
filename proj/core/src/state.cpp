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

#include "massdecoh/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "massdecoh/errors.hpp"

namespace massdecoh {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kNormTol = 1e-9;
constexpr Complex kI{0.0, 1.0};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// In-place kernels over a flat amplitude array. `bit` addresses the array
// index, so the same kernels serve the density matrix viewed as a 2n-qubit
// vector (row qubit q lives at bit q + n, column qubit q at bit q).

void kernel_1q(std::span<Complex> amps, int bit, const Matrix2& m) {
  const std::size_t stride = std::size_t{1} << bit;
  const std::size_t size = amps.size();
  for (std::size_t base = 0; base < size; base += 2 * stride) {
    for (std::size_t j = base; j < base + stride; ++j) {
      const Complex a0 = amps[j];
      const Complex a1 = amps[j + stride];
      amps[j] = m[0] * a0 + m[1] * a1;
      amps[j + stride] = m[2] * a0 + m[3] * a1;
    }
  }
}

void kernel_x(std::span<Complex> amps, int bit) {
  const std::size_t stride = std::size_t{1} << bit;
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
    for (std::size_t j = base; j < base + stride; ++j) std::swap(amps[j], amps[j + stride]);
  }
}

void kernel_z(std::span<Complex> amps, int bit) {
  const std::size_t stride = std::size_t{1} << bit;
  for (std::size_t base = stride; base < amps.size(); base += 2 * stride) {
    for (std::size_t j = base; j < base + stride; ++j) amps[j] = -amps[j];
  }
}

void kernel_diag(std::span<Complex> amps, int bit, Complex d0, Complex d1) {
  const std::size_t stride = std::size_t{1} << bit;
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
    for (std::size_t j = base; j < base + stride; ++j) {
      amps[j] *= d0;
      amps[j + stride] *= d1;
    }
  }
}

void kernel_cnot(std::span<Complex> amps, int control_bit, int target_bit) {
  const std::size_t cmask = std::size_t{1} << control_bit;
  const std::size_t tmask = std::size_t{1} << target_bit;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & cmask) && !(i & tmask)) std::swap(amps[i], amps[i | tmask]);
  }
}

void kernel_phase_flip_mask(std::span<Complex> amps, std::size_t mask) {
  // Visit only indices containing every bit of mask.
  const std::size_t free_bits = ~mask & (amps.size() - 1);
  std::size_t sub = 0;
  do {
    amps[sub | mask] = -amps[sub | mask];
    sub = (sub - free_bits) & free_bits;
  } while (sub != 0);
}

Matrix2 conj(const Matrix2& m) { return {std::conj(m[0]), std::conj(m[1]), std::conj(m[2]), std::conj(m[3])}; }

// Applies gate to `amps` with qubit q mapped to array bit q + offset;
// `conjugate` selects the complex-conjugated unitary.
void apply_to_array(std::span<Complex> amps, const GateOp& gate, int offset, bool conjugate) {
  std::visit(Overloaded{
                 [&](const gates::H& g) { kernel_1q(amps, g.qubit + offset, gate_matrix(g)); },
                 [&](const gates::X& g) { kernel_x(amps, g.qubit + offset); },
                 [&](const gates::Z& g) { kernel_z(amps, g.qubit + offset); },
                 [&](const gates::RZ& g) {
                   Complex d0 = std::polar(1.0, -0.5 * g.angle);
                   Complex d1 = std::polar(1.0, 0.5 * g.angle);
                   if (conjugate) {
                     d0 = std::conj(d0);
                     d1 = std::conj(d1);
                   }
                   kernel_diag(amps, g.qubit + offset, d0, d1);
                 },
                 [&](const gates::EquatorialPulse& g) {
                   const Matrix2 m = gate_matrix(g);
                   kernel_1q(amps, g.qubit + offset, conjugate ? conj(m) : m);
                 },
                 [&](const gates::CNOT& g) { kernel_cnot(amps, g.control + offset, g.target + offset); },
                 [&](const gates::MCZ& g) {
                   std::size_t mask = 0;
                   for (int q : g.qubits) mask |= std::size_t{1} << (q + offset);
                   kernel_phase_flip_mask(amps, mask);
                 },
             },
             gate);
}

void check_qubit(int q, int n_qubits, const char* role) {
  if (q < 0 || q >= n_qubits) {
    throw IndexError(std::string(role) + " qubit " + std::to_string(q) + " out of range for " +
                     std::to_string(n_qubits) + " qubits");
  }
}

std::size_t checked_dimension(int n_qubits, int max_qubits, const char* what) {
  if (n_qubits < 1 || n_qubits > max_qubits) {
    throw SizeError(std::string(what) + " supports 1.." + std::to_string(max_qubits) +
                    " qubits, got " + std::to_string(n_qubits));
  }
  return std::size_t{1} << n_qubits;
}

}  // namespace

Matrix2 gate_matrix(const GateOp& gate) {
  return std::visit(
      Overloaded{
          [](const gates::H&) -> Matrix2 {
            return {Complex{kInvSqrt2}, Complex{kInvSqrt2}, Complex{kInvSqrt2}, Complex{-kInvSqrt2}};
          },
          [](const gates::X&) -> Matrix2 { return {0.0, 1.0, 1.0, 0.0}; },
          [](const gates::Z&) -> Matrix2 { return {1.0, 0.0, 0.0, -1.0}; },
          [](const gates::RZ& g) -> Matrix2 {
            return {std::polar(1.0, -0.5 * g.angle), 0.0, 0.0, std::polar(1.0, 0.5 * g.angle)};
          },
          [](const gates::EquatorialPulse& g) -> Matrix2 {
            const Complex off_upper = -kI * std::polar(1.0, -g.azimuth);
            const Complex off_lower = -kI * std::polar(1.0, g.azimuth);
            return {Complex{kInvSqrt2}, kInvSqrt2 * off_upper, kInvSqrt2 * off_lower, Complex{kInvSqrt2}};
          },
          [](const gates::CNOT&) -> Matrix2 { throw ParameterError("CNOT is not a single-qubit gate"); },
          [](const gates::MCZ&) -> Matrix2 { throw ParameterError("MCZ is not a single-qubit gate"); },
      },
      gate);
}

void validate_gate(const GateOp& gate, int n_qubits) {
  std::visit(Overloaded{
                 [&](const gates::CNOT& g) {
                   check_qubit(g.control, n_qubits, "control");
                   check_qubit(g.target, n_qubits, "target");
                   if (g.control == g.target) throw IndexError("CNOT control equals target");
                 },
                 [&](const gates::MCZ& g) {
                   if (g.qubits.empty()) throw IndexError("MCZ needs at least one qubit");
                   std::uint64_t seen = 0;
                   for (int q : g.qubits) {
                     check_qubit(q, n_qubits, "MCZ");
                     if (seen & (std::uint64_t{1} << q)) throw IndexError("MCZ repeats qubit " + std::to_string(q));
                     seen |= std::uint64_t{1} << q;
                   }
                 },
                 [&](const auto& g) { check_qubit(g.qubit, n_qubits, "gate"); },
             },
             gate);
}

std::string describe(const GateOp& gate) {
  return std::visit(
      Overloaded{
          [](const gates::H& g) { return "H(" + std::to_string(g.qubit) + ")"; },
          [](const gates::X& g) { return "X(" + std::to_string(g.qubit) + ")"; },
          [](const gates::Z& g) { return "Z(" + std::to_string(g.qubit) + ")"; },
          [](const gates::RZ& g) { return "RZ(" + std::to_string(g.qubit) + ", " + std::to_string(g.angle) + ")"; },
          [](const gates::EquatorialPulse& g) {
            return "EquatorialPulse(" + std::to_string(g.qubit) + ", " + std::to_string(g.azimuth) + ")";
          },
          [](const gates::CNOT& g) {
            return "CNOT(" + std::to_string(g.control) + ", " + std::to_string(g.target) + ")";
          },
          [](const gates::MCZ& g) {
            std::string s = "MCZ{";
            for (std::size_t i = 0; i < g.qubits.size(); ++i) {
              if (i) s += ",";
              s += std::to_string(g.qubits[i]);
            }
            return s + "}";
          },
      },
      gate);
}

// ---------------------------------------------------------------------------
// Circuit

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  checked_dimension(n_qubits, kMaxPureQubits, "Circuit");
}

std::size_t Circuit::num_noise_sites() const {
  return static_cast<std::size_t>(std::count_if(
      ops_.begin(), ops_.end(), [](const CircuitOp& op) { return std::holds_alternative<NoiseSite>(op); }));
}

Circuit& Circuit::add(GateOp gate) {
  validate_gate(gate, n_qubits_);
  ops_.emplace_back(std::move(gate));
  return *this;
}

Circuit& Circuit::add_noise_site(NoiseSite site) {
  std::uint64_t seen = 0;
  for (int q : site.qubits) {
    check_qubit(q, n_qubits_, "noise site");
    if (seen & (std::uint64_t{1} << q)) throw IndexError("noise site repeats qubit " + std::to_string(q));
    seen |= std::uint64_t{1} << q;
  }
  ops_.emplace_back(std::move(site));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) throw ShapeError("cannot append circuits of different widths");
  ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
  return *this;
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  const std::size_t dim = checked_dimension(n_qubits, kMaxPureQubits, "PureState");
  if (amplitudes_.size() != dim) {
    throw ShapeError("PureState on " + std::to_string(n_qubits) + " qubits needs " + std::to_string(dim) +
                     " amplitudes, got " + std::to_string(amplitudes_.size()));
  }
  if (std::abs(norm() - 1.0) > kNormTol) throw ParameterError("PureState amplitudes are not normalized");
}

double PureState::norm() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

std::vector<double> PureState::probabilities() const {
  std::vector<double> probs(amplitudes_.size());
  std::transform(amplitudes_.begin(), amplitudes_.end(), probs.begin(), [](const Complex& a) { return std::norm(a); });
  return probs;
}

void PureState::apply(const GateOp& gate) {
  validate_gate(gate, n_qubits_);
  apply_to_array(amplitudes_, gate, 0, false);
}

void PureState::apply_z_mask(std::uint64_t mask) {
  if (mask >> n_qubits_) throw IndexError("Z mask addresses qubits beyond the state");
  if (mask == 0) return;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (std::popcount(i & mask) & 1) amplitudes_[i] = -amplitudes_[i];
  }
}

// ---------------------------------------------------------------------------
// MixedState

MixedState::MixedState(int n_qubits, std::vector<Complex> matrix)
    : n_qubits_(n_qubits), dim_(0), matrix_(std::move(matrix)) {
  dim_ = checked_dimension(n_qubits, kMaxMixedQubits, "MixedState");
  if (matrix_.size() != dim_ * dim_) throw ShapeError("MixedState matrix has the wrong number of entries");
  if (hermiticity_error() > 1e-9) throw ParameterError("MixedState matrix is not Hermitian");
  if (std::abs(trace() - 1.0) > 1e-9) throw ParameterError("MixedState trace is not 1");
  for (std::size_t i = 0; i < dim_; ++i) {
    if (at(i, i).real() < -1e-12) throw ParameterError("MixedState has a negative population");
  }
}

Complex MixedState::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

std::vector<double> MixedState::diagonal() const {
  std::vector<double> d(dim_);
  for (std::size_t i = 0; i < dim_; ++i) d[i] = at(i, i).real();
  return d;
}

double MixedState::hermiticity_error() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) worst = std::max(worst, std::abs(at(r, c) - std::conj(at(c, r))));
  }
  return worst;
}

void MixedState::apply(const GateOp& gate) {
  validate_gate(gate, n_qubits_);
  apply_to_array(matrix_, gate, n_qubits_, false);  // U on the row index
  apply_to_array(matrix_, gate, 0, true);           // conj(U) on the column index
}

void MixedState::apply_channel(std::span<const Matrix2> kraus, int target) {
  check_qubit(target, n_qubits_, "channel target");
  check_kraus_completeness(kraus);
  std::vector<Complex> result(matrix_.size(), Complex{0.0});
  std::vector<Complex> term;
  for (const Matrix2& k : kraus) {
    term = matrix_;
    kernel_1q(term, target + n_qubits_, k);
    kernel_1q(term, target, conj(k));
    for (std::size_t i = 0; i < term.size(); ++i) result[i] += term[i];
  }
  matrix_ = std::move(result);
}

// ---------------------------------------------------------------------------
// Free functions

PureState zero_state(int n_qubits) {
  const std::size_t dim = checked_dimension(n_qubits, kMaxPureQubits, "PureState");
  std::vector<Complex> amps(dim, Complex{0.0});
  amps[0] = 1.0;
  return PureState(n_qubits, std::move(amps));
}

PureState apply_gate(PureState state, const GateOp& gate) {
  state.apply(gate);
  return state;
}

PureState apply_circuit(PureState state, const Circuit& circuit, const NoiseResolver& resolver) {
  if (circuit.num_qubits() != state.num_qubits()) {
    throw ShapeError("circuit has " + std::to_string(circuit.num_qubits()) + " qubits but state has " +
                     std::to_string(state.num_qubits()));
  }
  for (const CircuitOp& op : circuit.ops()) {
    if (const auto* gate = std::get_if<GateOp>(&op)) {
      state.apply(*gate);
    } else {
      state.apply_z_mask(resolver(std::get<NoiseSite>(op)));
    }
  }
  return state;
}

NoiseResolver noiseless() {
  return [](const NoiseSite&) { return std::uint64_t{0}; };
}

std::map<std::uint64_t, std::uint64_t> sample_index_counts(const PureState& state, std::uint64_t shots,
                                                           RngStream& rng) {
  if (shots == 0) throw ParameterError("shots must be at least 1");
  std::vector<double> cdf = state.probabilities();
  for (std::size_t i = 1; i < cdf.size(); ++i) cdf[i] += cdf[i - 1];
  const double total = cdf.back();
  // u * total can round up to total; fall back to the last outcome with mass.
  std::size_t last_supported = cdf.size() - 1;
  while (last_supported > 0 && cdf[last_supported] == cdf[last_supported - 1]) --last_supported;
  std::map<std::uint64_t, std::uint64_t> by_index;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t index = it == cdf.end() ? last_supported : static_cast<std::size_t>(it - cdf.begin());
    ++by_index[index];
  }
  return by_index;
}

Counts sample_counts(const PureState& state, std::uint64_t shots, RngStream& rng) {
  const auto by_index = sample_index_counts(state, shots, rng);
  Counts counts;
  for (const auto& [index, n] : by_index) counts[bitstring(index, state.num_qubits())] = n;
  return counts;
}

MixedState dm_from_pure(const PureState& state) {
  const std::size_t dim = state.dimension();
  if (state.num_qubits() > kMaxMixedQubits) {
    throw SizeError("MixedState supports at most " + std::to_string(kMaxMixedQubits) + " qubits");
  }
  std::vector<Complex> matrix(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) matrix[r * dim + c] = state[r] * std::conj(state[c]);
  }
  return MixedState(state.num_qubits(), std::move(matrix));
}

MixedState dm_apply_gate(MixedState state, const GateOp& gate) {
  state.apply(gate);
  return state;
}

MixedState dm_apply_channel(MixedState state, std::span<const Matrix2> kraus, int target) {
  state.apply_channel(kraus, target);
  return state;
}

void check_kraus_completeness(std::span<const Matrix2> kraus, double tol) {
  if (kraus.empty()) throw ChannelError("empty Kraus set");
  Matrix2 sum{};
  for (const Matrix2& k : kraus) {
    // (K^dagger K)_{ij} = sum_l conj(K_li) K_lj
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        sum[2 * i + j] += std::conj(k[i]) * k[j] + std::conj(k[2 + i]) * k[2 + j];
      }
    }
  }
  const double err = std::max({std::abs(sum[0] - 1.0), std::abs(sum[1]), std::abs(sum[2]), std::abs(sum[3] - 1.0)});
  if (err > tol) throw ChannelError("Kraus set is not complete (deviation " + std::to_string(err) + ")");
}

std::string bitstring(std::uint64_t index, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q) {
    if ((index >> q) & 1) s[static_cast<std::size_t>(n_qubits - 1 - q)] = '1';
  }
  return s;
}

Counts marginalize(const Counts& counts, std::span<const int> qubits) {
  Counts out;
  for (const auto& [bits, n] : counts) {
    const int width = static_cast<int>(bits.size());
    std::string kept(qubits.size(), '0');
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      const int q = qubits[i];
      if (q < 0 || q >= width) throw IndexError("marginal qubit " + std::to_string(q) + " out of range");
      kept[qubits.size() - 1 - i] = bits[static_cast<std::size_t>(width - 1 - q)];
    }
    out[kept] += n;
  }
  return out;
}

double parity_expectation(const Counts& counts) {
  std::int64_t signed_sum = 0;
  std::uint64_t total = 0;
  for (const auto& [bits, n] : counts) {
    const auto ones = std::count(bits.begin(), bits.end(), '1');
    signed_sum += (ones % 2 == 0) ? static_cast<std::int64_t>(n) : -static_cast<std::int64_t>(n);
    total += n;
  }
  if (total == 0) throw InputError("parity of an empty histogram");
  return static_cast<double>(signed_sum) / static_cast<double>(total);
}

double parity_expectation(const MixedState& state) {
  double sum = 0.0;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    const double pop = state.at(i, i).real();
    sum += (std::popcount(i) & 1) ? -pop : pop;
  }
  return sum;
}

}  // namespace massdecoh
