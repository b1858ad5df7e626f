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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rhq/discriminator/discriminator.hpp"
#include "rhq/error.hpp"
#include "rhq/randstate/local_random.hpp"
#include "rhq/rng.hpp"
#include "rhq/sim/circuit.hpp"
#include "rhq/sim/gradient.hpp"
#include "rhq/sim/simulator.hpp"
#include "rhq/train/adam.hpp"

namespace rhq {

struct TrainRecord {
  std::size_t step = 0;
  double p_failure = 0.0;
  std::vector<double> parameters;
};

/// Trajectory of a training run. records[k] holds the cost measured at the
/// parameters reached after k updates. `converged` means the last recorded
/// cost is below the threshold.
struct TrainLog {
  std::vector<std::string> parameter_names;
  std::vector<TrainRecord> records;
  std::vector<double> final_parameters;
  std::size_t best_step = 0;
  bool converged = false;

  double initial_p_failure() const { return records.front().p_failure; }
  double final_p_failure() const { return records.back().p_failure; }
};

struct TrainOptions {
  std::size_t steps = 500;
  double learning_rate = 0.1;
  std::size_t batch = 4;
  std::uint64_t seed = 0;
  /// `converged` is set when the final cost is below this.
  double convergence_threshold = 1e-8;
  /// Training ends early at the first cost below this; 0 runs the full
  /// budget. Kept well under the check's 1e-10 equivalence threshold so a
  /// stopped run still verifies as Equivalent.
  double stop_threshold = 1e-14;
};

namespace detail {

inline void finish_log(TrainLog& log, double threshold) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < log.records.size(); ++i)
    if (log.records[i].p_failure < log.records[best].p_failure) best = i;
  log.best_step = log.records[best].step;
  log.final_parameters = log.records.back().parameters;
  log.converged = log.records.back().p_failure < threshold;
}

inline bool should_stop(const TrainLog& log, std::size_t step, const TrainOptions& opts) {
  if (step == opts.steps) return true;
  return log.records.back().p_failure < opts.stop_threshold;
}

inline ParamMap to_param_map(const std::vector<std::string>& names,
                             const std::vector<double>& values) {
  ParamMap m;
  for (std::size_t i = 0; i < names.size(); ++i) m.set(names[i], values[i]);
  return m;
}

}  // namespace detail

/// Trains the compensation angles on |0...0> inputs. Cost is the analytic
/// p_failure of the noisy discriminator; thetas start at zero.
inline std::pair<DiscriminatorParams, TrainLog> train_discriminator(
    std::size_t n_pairs, const NoiseModel& noise, const TrainOptions& opts) {
  const Circuit disc = build_discriminator_template(n_pairs, noise);
  const Statevector zero(2 * n_pairs);
  const CircuitCost cost = [&](const Circuit& c, const ParamMap& p) {
    return failure_mass(run_circuit(c, p, zero), n_pairs);
  };

  TrainLog log;
  log.parameter_names = disc.symbols();
  std::vector<double> theta(log.parameter_names.size(), 0.0);
  AdamState adam = AdamState::initial(theta.size(), opts.learning_rate);

  for (std::size_t step = 0;; ++step) {
    const ParamMap bound = detail::to_param_map(log.parameter_names, theta);
    log.records.push_back({step, cost(disc, bound), theta});
    if (detail::should_stop(log, step, opts)) break;
    const auto grad = cost_gradient(disc, cost, bound);
    std::tie(adam, theta) = adam_step(adam, theta, grad);
  }
  detail::finish_log(log, opts.convergence_threshold);
  return {DiscriminatorParams{log.final_parameters}, std::move(log)};
}

/// Trains the symbols of `ansatz` so that it reproduces `reference` on random
/// inputs. Every step draws a fresh batch of local random states (open loop);
/// the cost is the mean analytic p_failure over the batch through the given
/// (frozen) discriminator. Parameters start at zero. Returns the parameters
/// of the lowest-cost record.
inline std::pair<ParamMap, TrainLog> train_generator(
    const Circuit& reference, const Circuit& ansatz,
    const DiscriminatorParams& disc_params,
    const std::optional<NoiseModel>& noise, const TrainOptions& opts) {
  const std::size_t n = reference.num_qubits();
  if (ansatz.num_qubits() != n)
    throw StructuralError("reference and ansatz differ in qubit count");
  if (!ansatz.is_parameterized())
    throw ParameterError("ansatz has no trainable symbols");
  if (reference.is_parameterized())
    throw ParameterError("reference circuit must be fully bound before training");
  if (opts.batch == 0) throw ParameterError("batch must be >= 1");
  const auto params_d = disc_params.thetas.empty() ? DiscriminatorParams::zeros(n)
                                                   : disc_params;
  const Circuit disc = build_discriminator(n, params_d, noise);

  TrainLog log;
  log.parameter_names = ansatz.symbols();
  std::vector<double> beta(log.parameter_names.size(), 0.0);
  AdamState adam = AdamState::initial(beta.size(), opts.learning_rate);

  for (std::size_t step = 0;; ++step) {
    std::vector<Statevector> inputs, targets;
    for (std::size_t j = 0; j < opts.batch; ++j) {
      const LocalRandomSpec spec(
          n, rng::derive(opts.seed, rng::kTagBatch, step * opts.batch + j));
      inputs.push_back(prepare_local_random_state(spec));
      targets.push_back(run_circuit(reference, {}, inputs.back()));
    }
    const CircuitCost cost = [&](const Circuit& c, const ParamMap& p) {
      double sum = 0.0;
      for (std::size_t j = 0; j < inputs.size(); ++j)
        sum += failure_mass(
            discriminator_output(targets[j], run_circuit(c, p, inputs[j]), disc), n);
      return sum / static_cast<double>(inputs.size());
    };

    const ParamMap bound = detail::to_param_map(log.parameter_names, beta);
    log.records.push_back({step, cost(ansatz, bound), beta});
    if (detail::should_stop(log, step, opts)) break;
    const auto grad = cost_gradient(ansatz, cost, bound);
    std::tie(adam, beta) = adam_step(adam, beta, grad);
  }
  detail::finish_log(log, opts.convergence_threshold);
  const auto& best = log.records[log.best_step].parameters;
  return {detail::to_param_map(log.parameter_names, best), std::move(log)};
}

}  // namespace rhq
