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

#include <cstdio>
#include <string>
#include <vector>

#include "rhq/error.hpp"
#include "rhq/sim/circuit.hpp"
#include "rhq/sim/gate.hpp"

namespace rhq {

namespace qasm_detail {

inline std::string format_angle(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string qubit_ref(Qubit q) { return "q[" + std::to_string(q) + "]"; }

inline std::string emit_line(std::string_view name, const std::vector<double>& angles,
                             const std::vector<Qubit>& qs) {
  std::string s(name);
  if (!angles.empty()) {
    s += '(';
    for (std::size_t i = 0; i < angles.size(); ++i) {
      if (i) s += ',';
      s += format_angle(angles[i]);
    }
    s += ')';
  }
  for (std::size_t i = 0; i < qs.size(); ++i) s += (i ? "," : " ") + qubit_ref(qs[i]);
  return s + ";\n";
}

}  // namespace qasm_detail

/// Writes a bound circuit as OpenQASM 2.0 over a single register `q`. Angles
/// use 17 significant digits so that parse_qasm reproduces them exactly. CRy
/// is written as its two-CX decomposition.
inline std::string to_qasm(const Circuit& circuit) {
  if (circuit.is_parameterized())
    throw ParameterError("to_qasm needs a fully bound circuit");
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" +
                    std::to_string(circuit.num_qubits()) + "];\n";
  for (const Gate& g : circuit.gates()) {
    const auto info = detail::kind_info(g.kind);
    if (g.controls.size() != info.fixed_controls)
      throw CapabilityError(std::string(info.name) +
                            " with extra controls has no OpenQASM 2.0 form");
    const auto angles = g.angle_values({});
    if (g.kind == GateKind::CRy) {
      const Qubit c = g.controls[0], t = g.targets[0];
      out += qasm_detail::emit_line("ry", {angles[0] / 2}, {t});
      out += qasm_detail::emit_line("cx", {}, {c, t});
      out += qasm_detail::emit_line("ry", {-angles[0] / 2}, {t});
      out += qasm_detail::emit_line("cx", {}, {c, t});
      continue;
    }
    out += qasm_detail::emit_line(info.name, angles, g.qubits());
  }
  return out;
}

}  // namespace rhq
