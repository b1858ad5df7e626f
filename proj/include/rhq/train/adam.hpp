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

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rhq/error.hpp"

namespace rhq {

struct AdamState {
  std::size_t step = 0;
  std::vector<double> first_moment;
  std::vector<double> second_moment;
  double learning_rate = 0.1;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps_hat = 1e-8;

  static AdamState initial(std::size_t num_params, double learning_rate = 0.1) {
    AdamState s;
    s.first_moment.assign(num_params, 0.0);
    s.second_moment.assign(num_params, 0.0);
    s.learning_rate = learning_rate;
    return s;
  }
};

/// One bias-corrected Adam update. Returns the advanced state and the new
/// parameters; inputs are left untouched.
inline std::pair<AdamState, std::vector<double>> adam_step(
    const AdamState& state, std::span<const double> params,
    std::span<const double> grads) {
  if (params.size() != grads.size() ||
      params.size() != state.first_moment.size() ||
      params.size() != state.second_moment.size())
    throw ParameterError("adam_step: parameter, gradient and moment lengths differ");
  for (double g : grads)
    if (!std::isfinite(g)) throw ParameterError("adam_step: non-finite gradient");

  AdamState next = state;
  ++next.step;
  const double t = static_cast<double>(next.step);
  const double c1 = 1.0 - std::pow(state.beta1, t);
  const double c2 = 1.0 - std::pow(state.beta2, t);
  std::vector<double> out(params.begin(), params.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    next.first_moment[i] = state.beta1 * state.first_moment[i] + (1.0 - state.beta1) * grads[i];
    next.second_moment[i] =
        state.beta2 * state.second_moment[i] + (1.0 - state.beta2) * grads[i] * grads[i];
    const double m_hat = next.first_moment[i] / c1;
    const double v_hat = next.second_moment[i] / c2;
    out[i] -= state.learning_rate * m_hat / (std::sqrt(v_hat) + state.eps_hat);
  }
  return {std::move(next), std::move(out)};
}

}  // namespace rhq
