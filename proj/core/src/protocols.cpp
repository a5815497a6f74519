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

#include "massdecoh/protocols.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>

#include "massdecoh/errors.hpp"

namespace massdecoh {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<int> all_qubits(int n) {
  std::vector<int> qubits(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) qubits[static_cast<std::size_t>(q)] = q;
  return qubits;
}

// Everything in the branch circuit up to and including the uncompute; the
// analysis rotation is appended per phase point.
Circuit branch_prefix(int m, NoiseScope scope) {
  if (m < 0) throw SizeError("branch mass must be >= 0");
  Circuit c(m + 1);
  c.add(gates::H{0});
  for (int a = 1; a <= m; ++a) c.add(gates::CNOT{0, a});
  NoiseSite site;
  if (scope == NoiseScope::kAllQubits) {
    site.qubits = all_qubits(m + 1);
  } else {
    for (int a = 1; a <= m; ++a) site.qubits.push_back(a);
  }
  c.add_noise_site(std::move(site));
  for (int a = m; a >= 1; --a) c.add(gates::CNOT{0, a});
  return c;
}

Circuit branch_analysis(int width, double phase) {
  Circuit c(width);
  c.add(gates::RZ{0, phase});
  c.add(gates::H{0});
  return c;
}

Circuit parity_analysis(int n, double azimuth) {
  Circuit c(n);
  for (int q = 0; q < n; ++q) c.add(gates::EquatorialPulse{q, azimuth});
  return c;
}

// <prod_{q in mask} Z_q> from the populations of rho.
double z_expectation(const MixedState& rho, std::uint64_t mask) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rho.dimension(); ++i) {
    const double pop = rho.at(i, i).real();
    sum += (std::popcount(i & mask) & 1) ? -pop : pop;
  }
  return sum;
}

// Scans the phase grid. `prefix` is phase independent; `analysis(phi)`
// builds the phase-dependent tail; `measured` selects the qubits whose joint
// parity is recorded.
template <class Analysis>
ParityCurve scan_parity(const ExperimentConfig& config, const Circuit& prefix, double p, Analysis analysis,
                        std::uint64_t measured) {
  ParityCurve curve;
  curve.phases = phase_grid(config.phase_points);
  curve.parity.reserve(curve.phases.size());
  curve.std_error.reserve(curve.phases.size());

  if (config.backend == Backend::kExact) {
    const MixedState prepared = evolve_exact(prefix, p);
    for (double phi : curve.phases) {
      const MixedState rho = evolve_exact(prepared, analysis(phi), p);
      curve.parity.push_back(std::clamp(z_expectation(rho, measured), -1.0, 1.0));
      curve.std_error.push_back(0.0);
    }
    return curve;
  }

  std::vector<int> measured_qubits;
  for (int q = 0; q < prefix.num_qubits(); ++q) {
    if ((measured >> q) & 1) measured_qubits.push_back(q);
  }
  for (std::size_t j = 0; j < curve.phases.size(); ++j) {
    // Each phase point owns a stream derived from the config seed.
    RngStream rng(derive_seed(config.seed, static_cast<std::uint64_t>(j)));
    Circuit full = prefix;
    full.append(analysis(curve.phases[j]));
    const Counts counts = marginalize(sample_trajectories(full, p, config.shots, rng), measured_qubits);
    const double parity = parity_expectation(counts);
    curve.parity.push_back(parity);
    curve.std_error.push_back(parity_std_error(parity, config.shots));
  }
  return curve;
}

std::complex<double> fourier_coefficient(const ParityCurve& curve, int harmonic) {
  std::complex<double> sum = 0.0;
  for (std::size_t j = 0; j < curve.phases.size(); ++j) {
    sum += curve.parity[j] * std::polar(1.0, -harmonic * curve.phases[j]);
  }
  return sum / static_cast<double>(curve.phases.size());
}

void check_curve(const ParityCurve& curve, int harmonic) {
  if (curve.phases.size() != curve.parity.size()) throw InputError("parity curve lengths differ");
  if (harmonic < 1) throw SamplingError("harmonic must be >= 1");
  if (curve.phases.size() <= 2 * static_cast<std::size_t>(harmonic)) {
    throw SamplingError("harmonic " + std::to_string(harmonic) + " needs more than " + std::to_string(2 * harmonic) +
                        " phase points, got " + std::to_string(curve.phases.size()));
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  noise.validate();
  if (shots < 1) throw ParameterError("shots must be >= 1");
  std::visit(Overloaded{
                 [&](const GhzParity& k) {
                   if (k.n < 2 || k.n > 12) throw SizeError("GHZ size must lie in [2, 12]");
                   if (phase_points <= 2 * k.n) throw SamplingError("phase_points must exceed 2n");
                 },
                 [&](const BranchMass& k) {
                   if (k.m < 0 || k.m > 12) throw SizeError("branch mass must lie in [0, 12]");
                   if (phase_points <= 2) throw SamplingError("phase_points must exceed 2");
                 },
                 [&](const Grover& k) {
                   if (k.n < 3 || k.n > 5) throw SizeError("Grover size must lie in [3, 5]");
                   if (k.iterations < 0 || k.iterations > 7) throw SizeError("Grover iterations must lie in [0, 7]");
                 },
             },
             kind);
}

std::vector<double> phase_grid(int points) {
  if (points < 1) throw SamplingError("phase grid needs at least one point");
  std::vector<double> phases(static_cast<std::size_t>(points));
  for (int j = 0; j < points; ++j) phases[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * j / points;
  return phases;
}

Circuit build_ghz(int n) {
  if (n < 2) throw SizeError("GHZ state needs at least 2 qubits, got " + std::to_string(n));
  Circuit c(n);
  c.add(gates::H{0});
  for (int q = 0; q + 1 < n; ++q) c.add(gates::CNOT{q, q + 1});
  c.add_noise_site(NoiseSite{all_qubits(n)});
  return c;
}

Circuit build_branch(int m, NoiseScope scope, double phase) {
  Circuit c = branch_prefix(m, scope);
  c.append(branch_analysis(m + 1, phase));
  return c;
}

Circuit build_grover(int n, int iterations) {
  if (n < 2) throw SizeError("Grover search needs at least 2 qubits");
  if (iterations < 0) throw ParameterError("Grover iterations must be >= 0");
  const std::vector<int> qubits = all_qubits(n);
  Circuit c(n);
  for (int q : qubits) c.add(gates::H{q});
  for (int t = 0; t < iterations; ++t) {
    c.add(gates::MCZ{qubits});  // oracle marks |1...1>
    for (int q : qubits) c.add(gates::H{q});
    for (int q : qubits) c.add(gates::X{q});
    c.add(gates::MCZ{qubits});
    for (int q : qubits) c.add(gates::X{q});
    for (int q : qubits) c.add(gates::H{q});
    c.add_noise_site(NoiseSite{qubits});
  }
  return c;
}

VisibilityResult run_ghz_parity(const ExperimentConfig& config) {
  config.validate();
  const int n = std::get<GhzParity>(config.kind).n;
  VisibilityResult result;
  result.p_effective = noise_probability(config.noise, n);
  const std::uint64_t all_mask = (std::uint64_t{1} << n) - 1;
  result.curve = scan_parity(
      config, build_ghz(n), result.p_effective, [n](double phi) { return parity_analysis(n, phi); }, all_mask);
  result.visibility = visibility_from_curve(result.curve, n);
  result.std_error = visibility_std_error(result.curve, n);
  return result;
}

VisibilityResult run_branch(const ExperimentConfig& config) {
  config.validate();
  const int m = std::get<BranchMass>(config.kind).m;
  VisibilityResult result;
  result.p_effective = noise_probability(config.noise, m);
  result.curve = scan_parity(
      config, branch_prefix(m, config.noise.scope), result.p_effective,
      [m](double phi) { return branch_analysis(m + 1, phi); }, std::uint64_t{1});
  result.visibility = visibility_from_curve(result.curve, 1);
  result.std_error = visibility_std_error(result.curve, 1);
  return result;
}

SuccessResult run_grover(const ExperimentConfig& config) {
  config.validate();
  const auto [n, iterations] = std::get<Grover>(config.kind);
  const Circuit circuit = build_grover(n, iterations);
  const std::size_t marked = (std::size_t{1} << n) - 1;
  SuccessResult result;
  result.p_effective = noise_probability(config.noise, n);
  if (config.backend == Backend::kExact) {
    result.success = evolve_exact(circuit, result.p_effective).at(marked, marked).real();
    return result;
  }
  RngStream rng(derive_seed(config.seed, std::uint64_t{0}));
  const Counts counts = sample_trajectories(circuit, result.p_effective, config.shots, rng);
  const auto it = counts.find(bitstring(marked, n));
  const double hits = it == counts.end() ? 0.0 : static_cast<double>(it->second);
  const double shots = static_cast<double>(config.shots);
  result.success = hits / shots;
  result.std_error = std::sqrt(result.success * (1.0 - result.success) / shots);
  return result;
}

double visibility_from_curve(const ParityCurve& curve, int harmonic, VisibilityEstimator estimator) {
  check_curve(curve, harmonic);
  if (estimator == VisibilityEstimator::kPeakToPeak) {
    const auto [lo, hi] = std::minmax_element(curve.parity.begin(), curve.parity.end());
    return (*hi - *lo) / 2.0;
  }
  return 2.0 * std::abs(fourier_coefficient(curve, harmonic));
}

double visibility_std_error(const ParityCurve& curve, int harmonic) {
  check_curve(curve, harmonic);
  if (curve.std_error.size() != curve.phases.size()) throw InputError("parity curve lengths differ");
  const double m = static_cast<double>(curve.phases.size());
  double var_re = 0.0;
  double var_im = 0.0;
  for (std::size_t j = 0; j < curve.phases.size(); ++j) {
    const double s2 = curve.std_error[j] * curve.std_error[j];
    const double c = std::cos(harmonic * curve.phases[j]);
    const double s = std::sin(harmonic * curve.phases[j]);
    var_re += s2 * c * c;
    var_im += s2 * s * s;
  }
  var_re /= m * m;
  var_im /= m * m;
  const std::complex<double> coeff = fourier_coefficient(curve, harmonic);
  const double mag2 = std::norm(coeff);
  if (mag2 == 0.0) return 2.0 * std::sqrt((var_re + var_im) / 2.0);
  return 2.0 * std::sqrt((coeff.real() * coeff.real() * var_re + coeff.imag() * coeff.imag() * var_im) / mag2);
}

double parity_std_error(double parity, std::uint64_t shots) {
  return std::sqrt(std::max(0.0, 1.0 - parity * parity) / static_cast<double>(shots));
}

}  // namespace massdecoh
