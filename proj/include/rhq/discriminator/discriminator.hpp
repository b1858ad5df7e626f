// Copyright 2026 The rhq Authors
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

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rhq/error.hpp"
#include "rhq/sim/circuit.hpp"
#include "rhq/sim/gate.hpp"
#include "rhq/sim/param.hpp"
#include "rhq/sim/simulator.hpp"
#include "rhq/sim/statevector.hpp"

namespace rhq {

/// Compensation angles of the parameterized destructive SWAP test: for pair i,
/// thetas[2i] acts on the reference-side qubit and thetas[2i+1] on the
/// generator-side qubit, right after that pair's CZ.
struct DiscriminatorParams {
  std::vector<double> thetas;

  static DiscriminatorParams zeros(std::size_t n_pairs) {
    return {std::vector<double>(2 * n_pairs, 0.0)};
  }

  void validate(std::size_t n_pairs) const {
    if (thetas.size() != 2 * n_pairs)
      throw ParameterError("discriminator for " + std::to_string(n_pairs) +
                           " pair(s) needs " + std::to_string(2 * n_pairs) +
                           " thetas, got " + std::to_string(thetas.size()));
    for (double t : thetas)
      if (!std::isfinite(t)) throw ParameterError("non-finite discriminator theta");
  }

  friend bool operator==(const DiscriminatorParams&, const DiscriminatorParams&) = default;
};

/// Coherent CZ error: two stray Rz angles after every discriminator CZ,
/// laid out like DiscriminatorParams::thetas. Frozen once sampled.
struct NoiseModel {
  std::vector<double> epsilons;
  double sigma = 0.0;
  std::uint64_t seed = 0;

  void validate(std::size_t n_pairs) const {
    if (epsilons.size() != 2 * n_pairs)
      throw ParameterError("noise model has " + std::to_string(epsilons.size()) +
                           " angles, discriminator needs " +
                           std::to_string(2 * n_pairs));
  }

  friend bool operator==(const NoiseModel&, const NoiseModel&) = default;
};

/// 2*n_pairs angles drawn from N(0, sigma^2).
inline NoiseModel sample_noise(std::size_t n_pairs, double sigma,
                               std::uint64_t seed) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma))
    throw ParameterError("noise sigma must be finite and >= 0");
  NoiseModel m{std::vector<double>(2 * n_pairs, 0.0), sigma, seed};
  if (sigma == 0.0) return m;
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist(0.0, sigma);
  for (auto& e : m.epsilons) e = dist(gen);
  return m;
}

/// Measured bits of the reference half (bits_ref) and generator half
/// (bits_gen), as '0'/'1' characters in qubit order.
struct ShotOutcome {
  std::string bits_ref;
  std::string bits_gen;
};

/// Parity of sum_i (O_0^i AND O_1^i). Returns true for odd parity, which is
/// the failure event: a pair reading 11 is the singlet outcome of the
/// Bell-basis measurement, and an odd number of singlets marks the
/// antisymmetric subspace.
inline bool parity_statistic(const ShotOutcome& outcome) {
  if (outcome.bits_ref.size() != outcome.bits_gen.size())
    throw StructuralError("shot outcome halves differ in length");
  unsigned ones = 0;
  for (std::size_t i = 0; i < outcome.bits_ref.size(); ++i)
    ones += (outcome.bits_ref[i] == '1' && outcome.bits_gen[i] == '1');
  return (ones & 1U) != 0;
}

enum class EstimateMode { Analytic, Sampled };

struct FailureEstimate {
  double p_failure = 0.0;
  EstimateMode mode = EstimateMode::Analytic;
  std::size_t shots = 0;
  double std_error = 0.0;
};

inline std::string theta_symbol(std::size_t i) {
  return "theta_" + std::to_string(i);
}

/// Discriminator on 2*n_pairs qubits with symbolic thetas (theta_0, ...).
/// Pair i couples qubit i (reference half) with qubit n_pairs+i (generator
/// half) through
///
///   Rx(pi/2)@a, Rx(pi/2)@b, H@b, CZ(a,b), [noise Rz@a, Rz@b],
///   Rz(theta_2i)@a, Rz(theta_2i+1)@b, H@b, H@a
///
/// With the leading rotations and Rz angles dropped this is the CX-based
/// Bell-basis measurement of the destructive SWAP test. The common Rx(pi/2)
/// on both qubits commutes with the pair's singlet projector, so the failure
/// statistics are unchanged; it also puts both CZ operands in superposition
/// for |0>|0> inputs, which makes every compensation angle trainable from
/// zero states.
inline Circuit build_discriminator_template(
    std::size_t n_pairs, const std::optional<NoiseModel>& noise = std::nullopt) {
  if (n_pairs == 0) throw StructuralError("discriminator needs at least one pair");
  if (noise) noise->validate(n_pairs);
  std::vector<Gate> gs;
  gs.reserve(10 * n_pairs);
  for (std::size_t i = 0; i < n_pairs; ++i) {
    const Qubit a = i, b = n_pairs + i;
    gs.push_back(gates::rx(a, std::numbers::pi / 2));
    gs.push_back(gates::rx(b, std::numbers::pi / 2));
    gs.push_back(gates::h(b));
    gs.push_back(gates::cz(a, b));
    if (noise) {
      gs.push_back(gates::rz(a, noise->epsilons[2 * i]));
      gs.push_back(gates::rz(b, noise->epsilons[2 * i + 1]));
    }
    gs.push_back(gates::rz(a, ParamExpr::sym(theta_symbol(2 * i))));
    gs.push_back(gates::rz(b, ParamExpr::sym(theta_symbol(2 * i + 1))));
    gs.push_back(gates::h(b));
    gs.push_back(gates::h(a));
  }
  return Circuit(2 * n_pairs, std::move(gs));
}

inline ParamMap theta_bindings(const DiscriminatorParams& params) {
  ParamMap m;
  for (std::size_t i = 0; i < params.thetas.size(); ++i)
    m.set(theta_symbol(i), params.thetas[i]);
  return m;
}

/// Discriminator with concrete thetas.
inline Circuit build_discriminator(
    std::size_t n_pairs, const DiscriminatorParams& params,
    const std::optional<NoiseModel>& noise = std::nullopt) {
  params.validate(n_pairs);
  return build_discriminator_template(n_pairs, noise).bound(theta_bindings(params));
}

/// Whether basis index `index` of a 2n-qubit discriminator output is a
/// failure outcome.
inline bool is_failure_index(std::size_t index, std::size_t n_pairs) {
  const std::size_t mask = (std::size_t{1} << n_pairs) - 1;
  const std::size_t ref = index >> n_pairs;
  const std::size_t gen = index & mask;
  return (std::popcount(ref & gen) & 1) != 0;
}

/// Splits a 2n-qubit basis index into the two measured halves.
inline ShotOutcome outcome_of_index(std::size_t index, std::size_t n_pairs) {
  ShotOutcome o;
  o.bits_ref.resize(n_pairs);
  o.bits_gen.resize(n_pairs);
  for (std::size_t i = 0; i < n_pairs; ++i) {
    o.bits_ref[i] = ((index >> (2 * n_pairs - 1 - i)) & 1U) ? '1' : '0';
    o.bits_gen[i] = ((index >> (n_pairs - 1 - i)) & 1U) ? '1' : '0';
  }
  return o;
}

/// 2 x (probability mass on failure outcomes) of a discriminator output.
inline double failure_mass(const Statevector& output, std::size_t n_pairs) {
  double p = 0.0;
  const auto amps = output.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i)
    if (is_failure_index(i, n_pairs)) p += std::norm(amps[i]);
  return 2.0 * p;
}

/// State right before measurement for inputs (ref, gen).
inline Statevector discriminator_output(const Statevector& state_ref,
                                        const Statevector& state_gen,
                                        const Circuit& discriminator) {
  if (state_ref.num_qubits() != state_gen.num_qubits())
    throw StructuralError("reference and generator states differ in qubit count");
  if (discriminator.num_qubits() != 2 * state_ref.num_qubits())
    throw StructuralError("discriminator width does not match the input states");
  return run_circuit(discriminator, {}, state_ref.tensor(state_gen));
}

/// Exact failure probability (state_ref (x) state_gen through the
/// discriminator, noise included when given).
inline FailureEstimate p_failure_analytic(
    const Statevector& state_ref, const Statevector& state_gen,
    const DiscriminatorParams& params,
    const std::optional<NoiseModel>& noise = std::nullopt) {
  const std::size_t n = state_ref.num_qubits();
  const auto disc = build_discriminator(n, params, noise);
  const auto out = discriminator_output(state_ref, state_gen, disc);
  return {failure_mass(out, n), EstimateMode::Analytic, 0, 0.0};
}

/// Draws `shots` measurement outcomes of a discriminator output and scores
/// them: p_failure = 2 * failures / shots, std_error = 2 * sqrt(q (1 - q) /
/// shots) with q = failures / shots.
inline FailureEstimate sample_failure(const Statevector& output,
                                      std::size_t n_pairs, std::size_t shots,
                                      std::uint64_t seed) {
  if (shots == 0) throw ParameterError("sampled p_failure needs shots >= 1");
  std::vector<double> probs;
  probs.reserve(output.dim());
  for (const auto& a : output.amplitudes()) probs.push_back(std::norm(a));
  std::discrete_distribution<std::size_t> dist(probs.begin(), probs.end());
  std::mt19937_64 gen(seed);

  std::size_t failures = 0;
  for (std::size_t s = 0; s < shots; ++s)
    failures += parity_statistic(outcome_of_index(dist(gen), n_pairs)) ? 1 : 0;

  const double q = static_cast<double>(failures) / static_cast<double>(shots);
  return {2.0 * q, EstimateMode::Sampled, shots,
          2.0 * std::sqrt(q * (1.0 - q) / static_cast<double>(shots))};
}

/// Shot-sampled counterpart of p_failure_analytic; deterministic in `seed`.
inline FailureEstimate p_failure_sampled(
    const Statevector& state_ref, const Statevector& state_gen,
    const DiscriminatorParams& params, const std::optional<NoiseModel>& noise,
    std::size_t shots, std::uint64_t seed) {
  if (shots == 0) throw ParameterError("sampled p_failure needs shots >= 1");
  const std::size_t n = state_ref.num_qubits();
  const auto disc = build_discriminator(n, params, noise);
  return sample_failure(discriminator_output(state_ref, state_gen, disc), n,
                        shots, seed);
}

}  // namespace rhq
