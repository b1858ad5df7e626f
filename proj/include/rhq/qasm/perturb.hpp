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
#include <cstdint>
#include <string>
#include <variant>

#include "rhq/error.hpp"
#include "rhq/rng.hpp"
#include "rhq/sim/circuit.hpp"
#include "rhq/sim/gate.hpp"

namespace rhq {

/// Insert before gate `index` (index == size appends) on `qubit`.
struct ExplicitPosition {
  std::size_t index = 0;
  Qubit qubit = 0;
  friend bool operator==(const ExplicitPosition&, const ExplicitPosition&) = default;
};

/// Uniform over (gate boundary) x (qubit), drawn from `seed`.
struct RandomPosition {
  std::uint64_t seed = 0;
  friend bool operator==(const RandomPosition&, const RandomPosition&) = default;
};

struct PerturbationSpec {
  enum class Kind { InsertIdentity, InsertGate };
  Kind kind = Kind::InsertIdentity;
  GateKind gate_kind = GateKind::Rx;
  double angle = 0.0;
  std::variant<ExplicitPosition, RandomPosition> position = RandomPosition{};

  static PerturbationSpec identity(std::variant<ExplicitPosition, RandomPosition> pos) {
    return {Kind::InsertIdentity, GateKind::I, 0.0, pos};
  }
  static PerturbationSpec gate(GateKind k, double angle,
                               std::variant<ExplicitPosition, RandomPosition> pos) {
    return {Kind::InsertGate, k, angle, pos};
  }
};

/// Resolves the insertion slot of `spec` for `circuit`.
inline ExplicitPosition resolve_position(const Circuit& circuit, const PerturbationSpec& spec) {
  if (const auto* e = std::get_if<ExplicitPosition>(&spec.position)) {
    if (e->index > circuit.size())
      throw PositionError("insertion index " + std::to_string(e->index) +
                          " past end of circuit with " + std::to_string(circuit.size()) +
                          " gate(s)");
    if (e->qubit >= circuit.num_qubits())
      throw StructuralError("insertion qubit " + std::to_string(e->qubit) + " out of range");
    return *e;
  }
  if (circuit.empty())
    throw PositionError("cannot choose a random position in an empty circuit");
  if (circuit.is_parameterized())
    throw ParameterError("random insertion needs a fully bound circuit");
  const std::uint64_t seed = std::get<RandomPosition>(spec.position).seed;
  const std::uint64_t slots = (circuit.size() + 1) * circuit.num_qubits();
  const auto slot = static_cast<std::uint64_t>(
      rng::unit_interval(rng::derive(seed, rng::kTagPosition)) * static_cast<double>(slots));
  return {static_cast<std::size_t>(slot / circuit.num_qubits()),
          static_cast<Qubit>(slot % circuit.num_qubits())};
}

/// Returns `circuit` with exactly one gate inserted as described by `spec`.
inline Circuit insert_perturbation(const Circuit& circuit, const PerturbationSpec& spec) {
  if (!std::isfinite(spec.angle)) throw ParameterError("perturbation angle is not finite");
  Gate g;
  if (spec.kind == PerturbationSpec::Kind::InsertIdentity) {
    g = gates::id(0);
  } else {
    const auto info = detail::kind_info(spec.gate_kind);
    if (info.num_targets != 1 || info.fixed_controls != 0 || info.num_angles > 1)
      throw StructuralError("perturbation gate must be a single-qubit gate with at most one angle");
    g = info.num_angles == 1 ? gates::rotation(spec.gate_kind, 0, ParamExpr::literal(spec.angle))
                             : gates::single(spec.gate_kind, 0);
  }
  const ExplicitPosition pos = resolve_position(circuit, spec);
  g.targets = {pos.qubit};
  return circuit.inserted(pos.index, g);
}

}  // namespace rhq
