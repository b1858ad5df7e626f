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

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rhq/error.hpp"
#include "rhq/sim/param.hpp"

namespace rhq {

using complex_t = std::complex<double>;
using Qubit = std::size_t;

enum class GateKind {
  X, Y, Z, H, S, Sdg, T, Tdg, I,
  Rx, Ry, Rz, U1, U2, U3,
  CX, CZ, CRy, CCX, SWAP,
};

/// Row-major 2x2 complex matrix.
using Matrix2 = std::array<complex_t, 4>;

namespace detail {

struct KindInfo {
  std::string_view name;
  GateKind base;             // single-qubit operation applied to the target
  std::size_t num_angles;
  std::size_t fixed_controls;  // controls implied by the kind itself
  std::size_t num_targets;
};

constexpr KindInfo kind_info(GateKind k) {
  switch (k) {
    case GateKind::X: return {"x", GateKind::X, 0, 0, 1};
    case GateKind::Y: return {"y", GateKind::Y, 0, 0, 1};
    case GateKind::Z: return {"z", GateKind::Z, 0, 0, 1};
    case GateKind::H: return {"h", GateKind::H, 0, 0, 1};
    case GateKind::S: return {"s", GateKind::S, 0, 0, 1};
    case GateKind::Sdg: return {"sdg", GateKind::Sdg, 0, 0, 1};
    case GateKind::T: return {"t", GateKind::T, 0, 0, 1};
    case GateKind::Tdg: return {"tdg", GateKind::Tdg, 0, 0, 1};
    case GateKind::I: return {"id", GateKind::I, 0, 0, 1};
    case GateKind::Rx: return {"rx", GateKind::Rx, 1, 0, 1};
    case GateKind::Ry: return {"ry", GateKind::Ry, 1, 0, 1};
    case GateKind::Rz: return {"rz", GateKind::Rz, 1, 0, 1};
    case GateKind::U1: return {"u1", GateKind::U1, 1, 0, 1};
    case GateKind::U2: return {"u2", GateKind::U2, 2, 0, 1};
    case GateKind::U3: return {"u3", GateKind::U3, 3, 0, 1};
    case GateKind::CX: return {"cx", GateKind::X, 0, 1, 1};
    case GateKind::CZ: return {"cz", GateKind::Z, 0, 1, 1};
    case GateKind::CRy: return {"cry", GateKind::Ry, 1, 1, 1};
    case GateKind::CCX: return {"ccx", GateKind::X, 0, 2, 1};
    case GateKind::SWAP: return {"swap", GateKind::SWAP, 0, 0, 2};
  }
  return {"?", k, 0, 0, 0};
}

}  // namespace detail

inline std::string_view gate_name(GateKind k) {
  return detail::kind_info(k).name;
}

inline std::size_t angle_count(GateKind k) {
  return detail::kind_info(k).num_angles;
}

/// Rotation kinds whose angle enters as exp(-i angle G) with G having
/// eigenvalues +-1/2 (up to a global phase); the two-point shift rule is exact
/// for these.
inline bool is_shift_rule_kind(GateKind k) {
  return k == GateKind::Rx || k == GateKind::Ry || k == GateKind::Rz ||
         k == GateKind::U1;
}

/// Matrix of a single-qubit base operation with concrete angles.
inline Matrix2 single_qubit_matrix(GateKind base,
                                   const std::vector<double>& a) {
  using namespace std::complex_literals;
  constexpr double r = std::numbers::sqrt2 / 2.0;
  switch (base) {
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y: return {0.0, -1.0i, 1.0i, 0.0};
    case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::H: return {r, r, r, -r};
    case GateKind::S: return {1.0, 0.0, 0.0, 1.0i};
    case GateKind::Sdg: return {1.0, 0.0, 0.0, -1.0i};
    case GateKind::T: return {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)};
    case GateKind::Tdg: return {1.0, 0.0, 0.0, std::polar(1.0, -std::numbers::pi / 4)};
    case GateKind::I: return {1.0, 0.0, 0.0, 1.0};
    case GateKind::Rx: {
      const double c = std::cos(a[0] / 2), s = std::sin(a[0] / 2);
      return {c, -1.0i * s, -1.0i * s, c};
    }
    case GateKind::Ry: {
      const double c = std::cos(a[0] / 2), s = std::sin(a[0] / 2);
      return {c, -s, s, c};
    }
    case GateKind::Rz:
      return {std::polar(1.0, -a[0] / 2), 0.0, 0.0, std::polar(1.0, a[0] / 2)};
    case GateKind::U1: return {1.0, 0.0, 0.0, std::polar(1.0, a[0])};
    case GateKind::U2:
      return single_qubit_matrix(GateKind::U3, {std::numbers::pi / 2, a[0], a[1]});
    case GateKind::U3: {
      const double c = std::cos(a[0] / 2), s = std::sin(a[0] / 2);
      return {c, -std::polar(s, a[2]), std::polar(s, a[1]),
              std::polar(c, a[1] + a[2])};
    }
    default:
      throw StructuralError("not a single-qubit operation: " +
                            std::string(gate_name(base)));
  }
}

/// One gate application. `targets` and `controls` hold qubit indices; kinds
/// with built-in controls (CX, CZ, CRy, CCX) keep them in `controls`. Any
/// single-qubit kind may carry additional controls, which is how
/// multi-controlled operations are expressed.
struct Gate {
  GateKind kind = GateKind::I;
  std::vector<Qubit> targets;
  std::vector<Qubit> controls;
  std::vector<ParamExpr> angles;

  GateKind base() const noexcept { return detail::kind_info(kind).base; }

  std::vector<double> angle_values(const ParamMap& params) const {
    std::vector<double> out;
    out.reserve(angles.size());
    for (const auto& e : angles) out.push_back(e.evaluate(params));
    return out;
  }

  /// All touched qubits, controls first.
  std::vector<Qubit> qubits() const {
    std::vector<Qubit> q = controls;
    q.insert(q.end(), targets.begin(), targets.end());
    return q;
  }

  bool is_parameterized() const {
    for (const auto& e : angles)
      if (e.is_symbolic()) return true;
    return false;
  }

  /// Throws StructuralError unless arity and qubit indices are consistent
  /// with a register of `num_qubits`.
  void validate(std::size_t num_qubits) const {
    const auto info = detail::kind_info(kind);
    const std::string name(info.name);
    if (targets.size() != info.num_targets)
      throw StructuralError(name + ": expected " +
                            std::to_string(info.num_targets) + " target(s)");
    if (angles.size() != info.num_angles)
      throw StructuralError(name + ": expected " +
                            std::to_string(info.num_angles) + " angle(s)");
    if (controls.size() < info.fixed_controls)
      throw StructuralError(name + ": expected at least " +
                            std::to_string(info.fixed_controls) +
                            " control(s)");
    const auto all = qubits();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i] >= num_qubits)
        throw StructuralError(name + ": qubit " + std::to_string(all[i]) +
                              " out of range for " +
                              std::to_string(num_qubits) + " qubit(s)");
      for (std::size_t j = 0; j < i; ++j)
        if (all[i] == all[j])
          throw StructuralError(name + ": repeated qubit " +
                                std::to_string(all[i]));
    }
    for (const auto& e : angles)
      if (!std::isfinite(e.offset) || !std::isfinite(e.coeff))
        throw ParameterError(name + ": non-finite angle");
  }

  /// Gate implementing the inverse operation.
  Gate adjoint() const {
    Gate g = *this;
    switch (kind) {
      case GateKind::S: g.kind = GateKind::Sdg; break;
      case GateKind::Sdg: g.kind = GateKind::S; break;
      case GateKind::T: g.kind = GateKind::Tdg; break;
      case GateKind::Tdg: g.kind = GateKind::T; break;
      case GateKind::Rx:
      case GateKind::Ry:
      case GateKind::Rz:
      case GateKind::U1:
      case GateKind::CRy:
        g.angles[0] = angles[0].negated();
        break;
      case GateKind::U2:
        // U2(phi, lambda) = U3(pi/2, phi, lambda)
        g.kind = GateKind::U3;
        g.angles = {ParamExpr::literal(-std::numbers::pi / 2),
                    angles[1].negated(), angles[0].negated()};
        break;
      case GateKind::U3:
        g.angles = {angles[0].negated(), angles[2].negated(),
                    angles[1].negated()};
        break;
      default:
        break;  // self-inverse
    }
    return g;
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Convenience constructors.
namespace gates {

inline Gate single(GateKind k, Qubit q) { return Gate{k, {q}, {}, {}}; }
inline Gate x(Qubit q) { return single(GateKind::X, q); }
inline Gate y(Qubit q) { return single(GateKind::Y, q); }
inline Gate z(Qubit q) { return single(GateKind::Z, q); }
inline Gate h(Qubit q) { return single(GateKind::H, q); }
inline Gate s(Qubit q) { return single(GateKind::S, q); }
inline Gate sdg(Qubit q) { return single(GateKind::Sdg, q); }
inline Gate t(Qubit q) { return single(GateKind::T, q); }
inline Gate tdg(Qubit q) { return single(GateKind::Tdg, q); }
inline Gate id(Qubit q) { return single(GateKind::I, q); }

inline Gate rotation(GateKind k, Qubit q, ParamExpr angle) {
  return Gate{k, {q}, {}, {std::move(angle)}};
}
inline Gate rx(Qubit q, ParamExpr a) { return rotation(GateKind::Rx, q, std::move(a)); }
inline Gate ry(Qubit q, ParamExpr a) { return rotation(GateKind::Ry, q, std::move(a)); }
inline Gate rz(Qubit q, ParamExpr a) { return rotation(GateKind::Rz, q, std::move(a)); }
inline Gate u1(Qubit q, ParamExpr a) { return rotation(GateKind::U1, q, std::move(a)); }
inline Gate rx(Qubit q, double a) { return rx(q, ParamExpr::literal(a)); }
inline Gate ry(Qubit q, double a) { return ry(q, ParamExpr::literal(a)); }
inline Gate rz(Qubit q, double a) { return rz(q, ParamExpr::literal(a)); }
inline Gate u1(Qubit q, double a) { return u1(q, ParamExpr::literal(a)); }
inline Gate u2(Qubit q, double phi, double lambda) {
  return Gate{GateKind::U2, {q}, {}, {ParamExpr::literal(phi), ParamExpr::literal(lambda)}};
}
inline Gate u3(Qubit q, double theta, double phi, double lambda) {
  return Gate{GateKind::U3, {q}, {},
              {ParamExpr::literal(theta), ParamExpr::literal(phi),
               ParamExpr::literal(lambda)}};
}

inline Gate cx(Qubit c, Qubit t) { return Gate{GateKind::CX, {t}, {c}, {}}; }
inline Gate cz(Qubit a, Qubit b) { return Gate{GateKind::CZ, {b}, {a}, {}}; }
inline Gate cry(Qubit c, Qubit t, ParamExpr a) {
  return Gate{GateKind::CRy, {t}, {c}, {std::move(a)}};
}
inline Gate ccx(Qubit c0, Qubit c1, Qubit t) {
  return Gate{GateKind::CCX, {t}, {c0, c1}, {}};
}
inline Gate swap(Qubit a, Qubit b) { return Gate{GateKind::SWAP, {a, b}, {}, {}}; }

/// `g` with every qubit in `extra` added as a control.
inline Gate controlled(Gate g, const std::vector<Qubit>& extra) {
  g.controls.insert(g.controls.end(), extra.begin(), extra.end());
  return g;
}

}  // namespace gates

}  // namespace rhq
