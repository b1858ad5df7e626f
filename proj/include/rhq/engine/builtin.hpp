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

#include <string>
#include <string_view>
#include <vector>

#include "rhq/error.hpp"
#include "rhq/sim/circuit.hpp"
#include "rhq/sim/gate.hpp"

namespace rhq {

// Symbol names used by the built-in circuits.
inline constexpr const char* kDelta = "delta";
inline constexpr const char* kBeta = "beta";
inline constexpr const char* kBeta0 = "beta0";
inline constexpr const char* kBeta1 = "beta1";

namespace builtin {

/// Phase flip of |01>, |10>, |11>: unitary diag(1, -1, -1, -1), as CZ then Z
/// on both qubits.
inline Circuit flipper_a() {
  return Circuit(2, {gates::cz(0, 1), gates::z(0), gates::z(1)});
}

/// Phase flip of |00> (X.X CZ X.X = diag(-1, 1, 1, 1)) followed by a distortion
/// Ry(delta) on qubit 0. Equal to flipper_a up to the phase -1 at delta = 2k pi.
inline Circuit flipper_b() {
  return Circuit(2, {gates::x(0), gates::x(1), gates::cz(0, 1), gates::x(0),
                     gates::x(1), gates::ry(0, ParamExpr::sym(kDelta))});
}

/// Two trainable Rz angles and one CZ. (pi, pi) reproduces -flipper_a.
inline Circuit flipper_ansatz() {
  return Circuit(2, {gates::rz(0, ParamExpr::sym(kBeta0)),
                     gates::rz(1, ParamExpr::sym(kBeta1)), gates::cz(0, 1)});
}

/// CRy(beta), control 0, target 1: Ry(beta/2), CX, Ry(-beta/2), CX.
inline Circuit cry_d() {
  return Circuit(2, {gates::ry(1, ParamExpr::sym(kBeta, 0.5)), gates::cx(0, 1),
                     gates::ry(1, ParamExpr::sym(kBeta, -0.5)), gates::cx(0, 1)});
}

/// CRy(beta) as CX, Ry(-beta/2), CX, Ry(beta/2), followed by a distortion
/// Ry(delta) on the target. Exact CRy(beta) up to phase iff delta = 2k pi.
inline Circuit cry_e() {
  return Circuit(2, {gates::cx(0, 1), gates::ry(1, ParamExpr::sym(kBeta, -0.5)),
                     gates::cx(0, 1), gates::ry(1, ParamExpr::sym(kBeta, 0.5)),
                     gates::ry(1, ParamExpr::sym(kDelta))});
}

/// Empty single-qubit circuit.
inline Circuit identity_1() { return Circuit(1); }

/// Single trainable Ry(beta0); matches identity_1 at beta0 = 0.
inline Circuit ry_ansatz_1() {
  return Circuit(1, {gates::ry(0, ParamExpr::sym(kBeta0))});
}

}  // namespace builtin

inline std::vector<std::string> builtin_names() {
  return {"flipper_a", "flipper_b", "flipper_ansatz", "cry_d",
          "cry_e",     "identity_1", "ry_ansatz_1"};
}

/// Built-in circuit by name; symbols stay free (bind them with ParamMap).
inline Circuit builtin_circuit(std::string_view name) {
  if (name == "flipper_a") return builtin::flipper_a();
  if (name == "flipper_b") return builtin::flipper_b();
  if (name == "flipper_ansatz") return builtin::flipper_ansatz();
  if (name == "cry_d") return builtin::cry_d();
  if (name == "cry_e") return builtin::cry_e();
  if (name == "identity_1") return builtin::identity_1();
  if (name == "ry_ansatz_1") return builtin::ry_ansatz_1();
  throw ParameterError("unknown builtin circuit '" + std::string(name) + "'");
}

/// Difference unitary I_2 (+) ... (+) I_2 (+) U_s: `u_s` on the last qubit,
/// controlled by all others. With qubit 0 as the most significant index bit
/// this puts U_s in the final 2x2 diagonal block.
inline Circuit build_worst_case_difference(std::size_t n, const Gate& u_s) {
  if (n < 2) throw StructuralError("worst-case difference needs n >= 2");
  if (u_s.targets.size() != 1 || !u_s.controls.empty() ||
      u_s.kind == GateKind::CX || u_s.kind == GateKind::CZ ||
      u_s.kind == GateKind::CRy || u_s.kind == GateKind::CCX)
    throw StructuralError("worst-case difference needs a single-qubit gate");
  Gate g = u_s;
  g.targets = {n - 1};
  g.controls.clear();
  for (Qubit q = 0; q + 1 < n; ++q) g.controls.push_back(q);
  return Circuit(n, {g});
}

}  // namespace rhq
