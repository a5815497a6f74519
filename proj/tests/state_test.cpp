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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "massdecoh/errors.hpp"
#include "massdecoh/noise.hpp"
#include "reference_sim.hpp"

namespace massdecoh {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void expect_amplitudes(const PureState& s, const std::vector<Complex>& expected, double tol = 1e-12) {
  ASSERT_EQ(s.dimension(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(s[i].real(), expected[i].real(), tol) << "index " << i;
    EXPECT_NEAR(s[i].imag(), expected[i].imag(), tol) << "index " << i;
  }
}

TEST(state, ZeroState) {
  expect_amplitudes(zero_state(1), {1.0, 0.0});
  expect_amplitudes(zero_state(2), {1.0, 0.0, 0.0, 0.0});
  EXPECT_THROW(zero_state(17), SizeError);
  EXPECT_THROW(zero_state(0), SizeError);
  EXPECT_EQ(zero_state(16).dimension(), 65536u);
}

TEST(state, HadamardOnZero) {
  expect_amplitudes(apply_gate(zero_state(1), gates::H{0}), {kInvSqrt2, kInvSqrt2});
}

TEST(state, CnotMakesBellState) {
  PureState plus = apply_gate(zero_state(2), gates::H{0});
  expect_amplitudes(plus, {kInvSqrt2, kInvSqrt2, 0.0, 0.0});
  expect_amplitudes(apply_gate(plus, gates::CNOT{0, 1}), {kInvSqrt2, 0.0, 0.0, kInvSqrt2});
}

TEST(state, MczFlipsAllOnes) {
  std::vector<Complex> amps(8, 0.0);
  amps[7] = 1.0;
  PureState s(3, amps);
  s.apply(gates::MCZ{{0, 1, 2}});
  EXPECT_EQ(s[7], Complex(-1.0));
  // A partial control set touches every index containing it.
  PureState u = apply_gate(apply_gate(apply_gate(zero_state(3), gates::H{0}), gates::H{1}), gates::H{2});
  u.apply(gates::MCZ{{0, 2}});
  for (std::size_t i = 0; i < 8; ++i) {
    const double sign = ((i & 5) == 5) ? -1.0 : 1.0;
    EXPECT_NEAR(u[i].real(), sign / std::sqrt(8.0), 1e-12);
  }
}

TEST(state, EquatorialPulseAtZeroAzimuth) {
  const Matrix2 m = gate_matrix(gates::EquatorialPulse{0, 0.0});
  const Matrix2 expected = {Complex{kInvSqrt2, 0}, Complex{0, -kInvSqrt2}, Complex{0, -kInvSqrt2}, Complex{kInvSqrt2, 0}};
  for (int i = 0; i < 4; ++i) EXPECT_LT(std::abs(m[i] - expected[i]), 1e-12);
}

TEST(state, InvalidGatesRejected) {
  PureState s = zero_state(2);
  EXPECT_THROW(s.apply(gates::H{2}), IndexError);
  EXPECT_THROW(s.apply(gates::X{-1}), IndexError);
  EXPECT_THROW(s.apply(gates::CNOT{1, 1}), IndexError);
  EXPECT_THROW(s.apply(gates::MCZ{{}}), IndexError);
  EXPECT_THROW(s.apply(gates::MCZ{{0, 0}}), IndexError);
  Circuit c(2);
  EXPECT_THROW(c.add(gates::CNOT{0, 5}), IndexError);
  EXPECT_THROW(c.add_noise_site(NoiseSite{{0, 3}}), IndexError);
}

TEST(state, KernelsMatchDenseReference) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const PureState psi = testing::random_state(n, rng);
    const GateOp gate = testing::random_gate(n, rng);
    const PureState out = apply_gate(psi, gate);
    const auto expected = testing::matvec(testing::dense_gate(gate, n), psi.amplitudes());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      ASSERT_LT(std::abs(out[i] - expected[i]), 1e-12) << describe(gate) << " n=" << n;
    }
  }
}

TEST(state, EmptyCircuitIsIdentity) {
  std::mt19937_64 rng(3);
  const PureState psi = testing::random_state(3, rng);
  const PureState out = apply_circuit(psi, Circuit(3), noiseless());
  for (std::size_t i = 0; i < psi.dimension(); ++i) EXPECT_EQ(out[i], psi[i]);
}

TEST(state, GhzThreeByHand) {
  Circuit c(3);
  c.add(gates::H{0}).add(gates::CNOT{0, 1}).add(gates::CNOT{1, 2}).add_noise_site(NoiseSite{{0, 1, 2}});
  const PureState out = apply_circuit(zero_state(3), c, noiseless());
  expect_amplitudes(out, {kInvSqrt2, 0, 0, 0, 0, 0, 0, kInvSqrt2});
}

TEST(state, ResolverForcesZ) {
  Circuit c(1);
  c.add_noise_site(NoiseSite{{0}});
  const PureState plus = apply_gate(zero_state(1), gates::H{0});
  const PureState out = apply_circuit(plus, c, [](const NoiseSite&) { return std::uint64_t{1}; });
  expect_amplitudes(out, {kInvSqrt2, -kInvSqrt2});
}

TEST(state, CircuitWidthMismatch) {
  EXPECT_THROW(apply_circuit(zero_state(2), Circuit(3), noiseless()), ShapeError);
}

TEST(state, SampleCountsDeterministicStates) {
  RngStream rng(1);
  EXPECT_EQ(sample_counts(zero_state(1), 100, rng), (Counts{{"0", 100}}));
  const PureState one = apply_gate(zero_state(1), gates::X{0});
  EXPECT_EQ(sample_counts(one, 1, rng), (Counts{{"1", 1}}));
  EXPECT_THROW(sample_counts(one, 0, rng), ParameterError);
}

TEST(state, SampleCountsBellWithinBinomialBound) {
  const PureState bell = apply_gate(apply_gate(zero_state(2), gates::H{0}), gates::CNOT{0, 1});
  RngStream rng(2024);
  const Counts counts = sample_counts(bell, 2000, rng);
  const double bound = 4.0 * std::sqrt(2000 * 0.25);
  EXPECT_EQ(counts.count("01"), 0u);
  EXPECT_EQ(counts.count("10"), 0u);
  EXPECT_NEAR(static_cast<double>(counts.at("00")), 1000.0, bound);
  EXPECT_NEAR(static_cast<double>(counts.at("11")), 1000.0, bound);
  EXPECT_EQ(counts.at("00") + counts.at("11"), 2000u);
}

TEST(state, SampleCountsSameSeedSameHistogram) {
  std::mt19937_64 gen(5);
  const PureState psi = testing::random_state(4, gen);
  RngStream a(99), b(99);
  EXPECT_EQ(sample_counts(psi, 5000, a), sample_counts(psi, 5000, b));
}

TEST(state, BitstringPutsQubitZeroRightmost) {
  EXPECT_EQ(bitstring(1, 3), "001");
  EXPECT_EQ(bitstring(6, 3), "110");
  const Counts c = {{"001", 3}, {"100", 2}};
  const std::vector<int> q0 = {0};
  EXPECT_EQ(marginalize(c, q0), (Counts{{"0", 2}, {"1", 3}}));
}

TEST(state, DensityFromPure) {
  const MixedState zero = dm_from_pure(zero_state(1));
  EXPECT_EQ(zero.at(0, 0), Complex(1.0));
  EXPECT_EQ(zero.at(1, 1), Complex(0.0));
  const MixedState plus = dm_from_pure(apply_gate(zero_state(1), gates::H{0}));
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) EXPECT_NEAR(plus.at(r, c).real(), 0.5, 1e-15);
  std::mt19937_64 gen(11);
  EXPECT_NEAR(dm_from_pure(testing::random_state(5, gen)).trace().real(), 1.0, 1e-12);
  EXPECT_THROW(dm_from_pure(zero_state(11)), SizeError);
}

MixedState diag2(double a, double b) { return MixedState(1, {a, 0.0, 0.0, b}); }

TEST(state, DensityGates) {
  const MixedState z = dm_apply_gate(diag2(0.3, 0.7), gates::Z{0});
  EXPECT_NEAR(z.at(0, 0).real(), 0.3, 1e-15);
  EXPECT_NEAR(z.at(1, 1).real(), 0.7, 1e-15);
  EXPECT_EQ(z.at(0, 1), Complex(0.0));
  const MixedState h = dm_apply_gate(diag2(1.0, 0.0), gates::H{0});
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) EXPECT_NEAR(h.at(r, c).real(), 0.5, 1e-15);
  const MixedState x = dm_apply_gate(diag2(1.0, 0.0), gates::X{0});
  EXPECT_EQ(x.at(0, 0), Complex(0.0));
  EXPECT_EQ(x.at(1, 1), Complex(1.0));
}

TEST(state, DensityGatesMatchPureEvolution) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 3;
    PureState psi = testing::random_state(n, rng);
    MixedState rho = dm_from_pure(psi);
    for (int g = 0; g < 5; ++g) {
      const GateOp gate = testing::random_gate(n, rng);
      psi.apply(gate);
      rho.apply(gate);
    }
    const MixedState expected = dm_from_pure(psi);
    for (std::size_t i = 0; i < expected.data().size(); ++i) {
      ASSERT_LT(std::abs(rho.data()[i] - expected.data()[i]), 1e-12);
    }
  }
}

TEST(state, PhaseFlipChannelExamples) {
  const MixedState plus(1, {0.5, 0.5, 0.5, 0.5});
  const MixedState full = dm_apply_channel(plus, phase_flip_kraus(0.5), 0);
  EXPECT_NEAR(std::abs(full.at(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(full.at(0, 0).real(), 0.5, 1e-15);
  const MixedState same = dm_apply_channel(plus, phase_flip_kraus(0.0), 0);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(same.data()[i] - plus.data()[i]), 0.0, 1e-15);
  const MixedState partial = dm_apply_channel(plus, phase_flip_kraus(0.08), 0);
  EXPECT_NEAR(partial.at(0, 1).real(), 0.42, 1e-15);
  EXPECT_NEAR(partial.at(1, 0).real(), 0.42, 1e-15);
}

TEST(state, IncompleteKrausRejected) {
  const MixedState plus(1, {0.5, 0.5, 0.5, 0.5});
  const std::vector<Matrix2> broken = {Matrix2{0.9, 0.0, 0.0, 0.9}};
  EXPECT_THROW(dm_apply_channel(plus, broken, 0), ChannelError);
  EXPECT_THROW(dm_apply_channel(plus, std::vector<Matrix2>{}, 0), ChannelError);
  EXPECT_THROW(dm_apply_channel(plus, phase_flip_kraus(0.1), 1), IndexError);
}

TEST(state, ParityExpectation) {
  EXPECT_DOUBLE_EQ(parity_expectation(Counts{{"00", 500}, {"11", 500}}), 1.0);
  EXPECT_DOUBLE_EQ(parity_expectation(Counts{{"01", 1000}}), -1.0);
  EXPECT_DOUBLE_EQ(parity_expectation(Counts{{"00", 500}, {"01", 500}}), 0.0);
  EXPECT_THROW(parity_expectation(Counts{}), InputError);
  EXPECT_THROW(parity_expectation(Counts{{"0", 0}}), InputError);
}

TEST(state, MixedStateValidation) {
  EXPECT_THROW(MixedState(1, {0.5, 0.0, 0.0, 0.6}), ParameterError);
  EXPECT_THROW(MixedState(1, {0.5, 0.2, 0.0, 0.5}), ParameterError);
  EXPECT_THROW(MixedState(1, {1.0, 0.0, 0.0}), ShapeError);
  EXPECT_THROW(PureState(1, {1.0, 1.0}), ParameterError);
}

}  // namespace
}  // namespace massdecoh
