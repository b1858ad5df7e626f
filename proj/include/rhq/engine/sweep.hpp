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
#include <string>
#include <vector>

#include "rhq/engine/builtin.hpp"
#include "rhq/engine/check.hpp"
#include "rhq/error.hpp"
#include "rhq/sim/circuit.hpp"

namespace rhq {

struct SweepPoint {
  double delta = 0.0;
  double mean_p_failure = 0.0;
  double std_dev = 0.0;
  double max_p_failure = 0.0;
};

/// `count` evenly spaced points from `low` to `high` inclusive.
inline std::vector<double> linear_grid(double low, double high, std::size_t count) {
  if (count == 0) throw ParameterError("grid needs at least one point");
  if (count == 1) return {low};
  std::vector<double> g(count);
  for (std::size_t i = 0; i < count; ++i)
    g[i] = low + (high - low) * static_cast<double>(i) /
                     static_cast<double>(count - 1);
  return g;
}

/// One equivalence check per grid value of `symbol` in the generator. All
/// points reuse `config.seed`, so every point sees the same input states and
/// free-parameter draws.
inline std::vector<SweepPoint> delta_sweep(const Circuit& reference,
                                           const Circuit& generator,
                                           const std::vector<double>& deltas,
                                           const CheckConfig& config,
                                           const std::string& symbol = kDelta) {
  if (!generator.has_symbol(symbol))
    throw ParameterError("generator has no symbol '" + symbol + "' to sweep");
  std::vector<SweepPoint> out;
  out.reserve(deltas.size());
  for (double d : deltas) {
    CheckConfig c = config;
    c.fixed_params.set(symbol, d);
    const auto r = check_equivalence(reference, generator, c);
    out.push_back({d, r.mean_p_failure, r.std_dev, r.max_p_failure});
  }
  return out;
}

}  // namespace rhq
