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
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "rhq/error.hpp"
#include "rhq/sim/circuit.hpp"
#include "rhq/sim/param.hpp"

namespace rhq {

/// Scalar cost evaluated on a (possibly angle-shifted) copy of a circuit.
/// Must be an expectation value of a fixed observable of the circuit output
/// for the shift rule to be exact.
using CircuitCost = std::function<double(const Circuit&, const ParamMap&)>;

/// d cost / d symbol for every symbol of `circuit`, in `circuit.symbols()`
/// order, by the two-point parameter-shift rule
///
///   g = [cost(angle + pi/2) - cost(angle - pi/2)] / 2
///
/// applied to each gate angle that references the symbol, weighted by the
/// symbol's coefficient in that angle and summed over occurrences.
inline std::vector<double> cost_gradient(const Circuit& circuit,
                                         const CircuitCost& cost,
                                         const ParamMap& params) {
  circuit.require_bound(params);
  const auto& symbols = circuit.symbols();
  std::vector<double> grad(symbols.size(), 0.0);
  constexpr double shift = std::numbers::pi / 2;

  for (std::size_t gi = 0; gi < circuit.size(); ++gi) {
    const Gate& g = circuit.gates()[gi];
    for (std::size_t ai = 0; ai < g.angles.size(); ++ai) {
      const ParamExpr& e = g.angles[ai];
      if (!e.symbol) continue;
      if (!is_shift_rule_kind(g.kind) || !g.controls.empty())
        throw UnsupportedGradientError(
            "symbol '" + *e.symbol + "' enters gate '" +
            std::string(gate_name(g.kind)) +
            (g.controls.empty() ? "" : " (controlled)") +
            "'; only Rx/Ry/Rz/U1 angles are differentiable");
      const double plus = cost(circuit.with_shifted_angle(gi, ai, shift), params);
      const double minus = cost(circuit.with_shifted_angle(gi, ai, -shift), params);
      std::size_t k = 0;
      while (symbols[k] != *e.symbol) ++k;
      grad[k] += e.coeff * (plus - minus) / 2.0;
    }
  }
  return grad;
}

}  // namespace rhq
