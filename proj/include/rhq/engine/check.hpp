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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "rhq/discriminator/discriminator.hpp"
#include "rhq/error.hpp"
#include "rhq/randstate/local_random.hpp"
#include "rhq/rng.hpp"
#include "rhq/sim/circuit.hpp"
#include "rhq/sim/simulator.hpp"

namespace rhq {

enum class Verdict { Equivalent, NotEquivalent, Inconclusive };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "Equivalent";
    case Verdict::NotEquivalent: return "NotEquivalent";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

/// Rule for instantiating free symbols per parameter sample, uniformly on
/// [low, high). An empty `symbols` list covers every unbound symbol shared by
/// both circuits; symbols present in only one circuit must be listed.
struct FreeParamSampling {
  std::vector<std::string> symbols;
  double low = 0.0;
  double high = 2.0 * std::numbers::pi;
};

struct CheckConfig {
  std::size_t num_states = 100;
  EstimateMode mode = EstimateMode::Analytic;
  std::size_t shots = 1000;
  std::uint64_t seed = 0;
  std::optional<NoiseModel> noise;
  /// Empty means all-zero thetas.
  DiscriminatorParams discriminator_params;
  /// Bindings applied in every trial (e.g. the delta of a sweep point).
  ParamMap fixed_params;
  std::optional<FreeParamSampling> free_param_sampling;
  /// Trials form a num_states x param_samples grid.
  std::size_t param_samples = 1;
  double equivalence_threshold = 1e-10;
  double detection_threshold = 1e-4;

  void validate() const {
    if (num_states == 0) throw ParameterError("num_states must be >= 1");
    if (param_samples == 0) throw ParameterError("param_samples must be >= 1");
    if (mode == EstimateMode::Sampled && shots == 0)
      throw ParameterError("sampled mode needs shots >= 1");
  }
};

struct TrialRecord {
  std::size_t state_index = 0;
  std::size_t param_index = 0;
  LocalRandomSpec random_spec;
  ParamMap bindings;
  FailureEstimate estimate;
};

struct EquivalenceReport {
  std::size_t num_qubits = 0;
  EstimateMode mode = EstimateMode::Analytic;
  std::vector<TrialRecord> per_trial;
  double mean_p_failure = 0.0;
  double max_p_failure = 0.0;
  /// Population standard deviation over trials.
  double std_dev = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  /// exp(-m_total / 2^(n-1)) in sampled mode; 0 and not applicable otherwise.
  double undetected_bound = 0.0;
  bool undetected_bound_applicable = false;
};

/// Probability that a worst-case single controlled error stays hidden for m
/// shots on n qubits: exp(-m / 2^(n-1)).
inline double worst_case_undetected(std::size_t n, std::uint64_t m) {
  if (n == 0) throw ParameterError("worst_case_undetected needs n >= 1");
  return std::exp(-static_cast<double>(m) / std::ldexp(1.0, static_cast<int>(n) - 1));
}

struct Aggregates {
  double mean = 0.0;
  double max = 0.0;
  double std_dev = 0.0;
};

inline Aggregates aggregate(const std::vector<TrialRecord>& trials) {
  Aggregates a;
  if (trials.empty()) return a;
  for (const auto& t : trials) {
    a.mean += t.estimate.p_failure;
    a.max = std::max(a.max, t.estimate.p_failure);
  }
  a.mean /= static_cast<double>(trials.size());
  double var = 0.0;
  for (const auto& t : trials) {
    const double d = t.estimate.p_failure - a.mean;
    var += d * d;
  }
  a.std_dev = std::sqrt(var / static_cast<double>(trials.size()));
  return a;
}

/// Verdict implied by a set of trial records under `config`'s thresholds.
/// Analytic: Equivalent iff max < equivalence_threshold. Sampled: Equivalent
/// iff no failure shot was observed. Either mode: NotEquivalent iff the mean
/// exceeds detection_threshold; Inconclusive otherwise.
inline Verdict decide_verdict(const std::vector<TrialRecord>& trials,
                              EstimateMode mode, const CheckConfig& config) {
  const auto agg = aggregate(trials);
  const bool clean = mode == EstimateMode::Analytic
                         ? agg.max < config.equivalence_threshold
                         : agg.max == 0.0;
  if (clean) return Verdict::Equivalent;
  if (agg.mean > config.detection_threshold) return Verdict::NotEquivalent;
  return Verdict::Inconclusive;
}

namespace detail {

/// Symbols that the sampling rule must draw, sorted by name.
inline std::vector<std::string> symbols_to_sample(const Circuit& reference,
                                                  const Circuit& generator,
                                                  const CheckConfig& config) {
  std::vector<std::string> all = reference.symbols();
  for (const auto& s : generator.symbols())
    if (std::find(all.begin(), all.end(), s) == all.end()) all.push_back(s);
  std::sort(all.begin(), all.end());

  std::vector<std::string> out;
  for (const auto& s : all) {
    if (config.fixed_params.contains(s)) continue;
    const bool shared = reference.has_symbol(s) && generator.has_symbol(s);
    const auto& rule = config.free_param_sampling;
    const bool listed =
        rule && std::find(rule->symbols.begin(), rule->symbols.end(), s) !=
                    rule->symbols.end();
    const bool covered = rule && (listed || (shared && rule->symbols.empty()));
    if (!covered)
      throw ParameterError(
          "symbol '" + s + "' is " + (shared ? "shared" : "unique to one circuit") +
          " and neither bound nor covered by a sampling rule");
    out.push_back(s);
  }
  return out;
}

}  // namespace detail

/// Random-input equivalence check of `generator` against `reference`.
///
/// Trial (s, p) prepares the local random state derived from (seed, s), draws
/// free parameters from (seed, p), runs both circuits and scores the pair of
/// outputs with the discriminator. Trials are visited state-major and
/// aggregated in that order.
inline EquivalenceReport check_equivalence(const Circuit& reference,
                                           const Circuit& generator,
                                           const CheckConfig& config) {
  config.validate();
  const std::size_t n = reference.num_qubits();
  if (generator.num_qubits() != n)
    throw StructuralError("reference has " + std::to_string(n) +
                          " qubits but generator has " +
                          std::to_string(generator.num_qubits()));
  const auto sampled_symbols = detail::symbols_to_sample(reference, generator, config);
  const auto disc_params = config.discriminator_params.thetas.empty()
                               ? DiscriminatorParams::zeros(n)
                               : config.discriminator_params;
  disc_params.validate(n);
  if (config.noise) config.noise->validate(n);
  const auto disc = build_discriminator(n, disc_params, config.noise);

  // Parameter samples are shared by every state.
  const std::size_t n_param = sampled_symbols.empty() ? 1 : config.param_samples;
  std::vector<ParamMap> bindings(n_param, config.fixed_params);
  if (!sampled_symbols.empty()) {
    const auto& rule = *config.free_param_sampling;
    for (std::size_t p = 0; p < n_param; ++p) {
      const std::uint64_t pseed = rng::derive(config.seed, rng::kTagParams, p);
      for (std::size_t j = 0; j < sampled_symbols.size(); ++j)
        bindings[p].set(sampled_symbols[j],
                        rule.low + (rule.high - rule.low) *
                                       rng::unit_interval(rng::derive(pseed, j)));
    }
  }

  EquivalenceReport report;
  report.num_qubits = n;
  report.mode = config.mode;
  report.per_trial.reserve(config.num_states * n_param);
  for (std::size_t s = 0; s < config.num_states; ++s) {
    const LocalRandomSpec spec(n, rng::derive(config.seed, rng::kTagState, s));
    const auto input = prepare_local_random_state(spec);
    for (std::size_t p = 0; p < n_param; ++p) {
      const auto out_ref = run_circuit(reference, bindings[p], input);
      const auto out_gen = run_circuit(generator, bindings[p], input);
      const auto joint = discriminator_output(out_ref, out_gen, disc);
      FailureEstimate est;
      if (config.mode == EstimateMode::Analytic) {
        est = {failure_mass(joint, n), EstimateMode::Analytic, 0, 0.0};
      } else {
        const std::uint64_t shot_seed =
            rng::derive(config.seed, rng::kTagShots, report.per_trial.size());
        est = sample_failure(joint, n, config.shots, shot_seed);
      }
      report.per_trial.push_back({s, p, spec, bindings[p], est});
    }
  }

  const auto agg = aggregate(report.per_trial);
  report.mean_p_failure = agg.mean;
  report.max_p_failure = agg.max;
  report.std_dev = agg.std_dev;
  report.verdict = decide_verdict(report.per_trial, config.mode, config);
  if (config.mode == EstimateMode::Sampled) {
    report.undetected_bound = worst_case_undetected(
        n, static_cast<std::uint64_t>(report.per_trial.size() * config.shots));
    report.undetected_bound_applicable = true;
  }
  return report;
}

}  // namespace rhq
