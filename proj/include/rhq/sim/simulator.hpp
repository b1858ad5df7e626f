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

#include "rhq/error.hpp"
#include "rhq/sim/circuit.hpp"
#include "rhq/sim/gate.hpp"
#include "rhq/sim/matrix.hpp"
#include "rhq/sim/param.hpp"
#include "rhq/sim/statevector.hpp"

namespace rhq {

/// unitary_of refuses registers wider than this.
inline constexpr std::size_t kMaxUnitaryQubits = 12;

/// Applies one gate in place. The gate must already have been validated
/// against the state's width (Circuit construction does this).
inline void apply_gate(Statevector& state, const Gate& g,
                       const ParamMap& params) {
  if (g.kind == GateKind::SWAP) {
    state.apply_swap(g.targets[0], g.targets[1], g.controls);
    return;
  }
  state.apply_matrix(single_qubit_matrix(g.base(), g.angle_values(params)),
                     g.targets[0], g.controls);
}

/// Runs `circuit` on a copy of `initial`. No renormalization is applied, so
/// running A then B on the result is bit-identical to running A+B.
inline Statevector run_circuit(const Circuit& circuit, const ParamMap& params,
                               const Statevector& initial) {
  if (initial.num_qubits() != circuit.num_qubits())
    throw StructuralError("circuit acts on " +
                          std::to_string(circuit.num_qubits()) +
                          " qubits but the initial state has " +
                          std::to_string(initial.num_qubits()));
  circuit.require_bound(params);
  Statevector state = initial;
  for (const auto& g : circuit.gates()) apply_gate(state, g, params);
  return state;
}

/// Runs `circuit` from |0...0>.
inline Statevector run_circuit(const Circuit& circuit,
                               const ParamMap& params = {}) {
  return run_circuit(circuit, params, Statevector(circuit.num_qubits()));
}

/// Full unitary; column j is the circuit applied to basis state |j>.
inline ComplexMatrix unitary_of(const Circuit& circuit,
                                const ParamMap& params = {}) {
  const std::size_t n = circuit.num_qubits();
  if (n > kMaxUnitaryQubits)
    throw CapabilityError("unitary_of limited to " +
                          std::to_string(kMaxUnitaryQubits) + " qubits, got " +
                          std::to_string(n));
  circuit.require_bound(params);
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix u(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const auto col = run_circuit(circuit, params, Statevector::basis(n, j));
    for (std::size_t i = 0; i < dim; ++i) u(i, j) = col[i];
  }
  return u;
}

}  // namespace rhq
