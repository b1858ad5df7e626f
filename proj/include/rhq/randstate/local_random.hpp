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
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "rhq/error.hpp"
#include "rhq/rng.hpp"
#include "rhq/sim/circuit.hpp"
#include "rhq/sim/gate.hpp"
#include "rhq/sim/statevector.hpp"

namespace rhq {

/// Rotation angles for one qubit of the local random circuit; the qubit ends
/// up in Rz(a) Ry(b) Rz(c) |0>.
struct QubitAngles {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  friend bool operator==(const QubitAngles&, const QubitAngles&) = default;
};

/// Product-state distribution used as test input. Angles are uniform on
/// [0, 2pi) and derived from (seed, qubit, slot), so a spec is fully described
/// by {n, seed}.
class LocalRandomSpec {
 public:
  LocalRandomSpec() = default;

  LocalRandomSpec(std::size_t num_qubits, std::uint64_t seed)
      : num_qubits_(num_qubits), seed_(seed) {
    if (num_qubits == 0) throw StructuralError("local random spec needs n >= 1");
    angles_.reserve(num_qubits);
    for (std::size_t k = 0; k < num_qubits; ++k)
      angles_.push_back({draw(k, 0), draw(k, 1), draw(k, 2)});
  }

  /// Explicit angles, mainly for tests; the seed is recorded as 0.
  static LocalRandomSpec with_angles(std::vector<QubitAngles> angles) {
    LocalRandomSpec s;
    s.num_qubits_ = angles.size();
    if (s.num_qubits_ == 0) throw StructuralError("local random spec needs n >= 1");
    s.angles_ = std::move(angles);
    return s;
  }

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::vector<QubitAngles>& per_qubit_angles() const noexcept { return angles_; }

  /// (amplitude of |0>, amplitude of |1>) for qubit k.
  std::array<complex_t, 2> qubit_state(std::size_t k) const {
    const auto& q = angles_.at(k);
    const complex_t phase = std::polar(1.0, -q.c / 2);
    return {phase * std::polar(std::cos(q.b / 2), -q.a / 2),
            phase * std::polar(std::sin(q.b / 2), q.a / 2)};
  }

  friend bool operator==(const LocalRandomSpec&, const LocalRandomSpec&) = default;

 private:
  double draw(std::size_t k, std::uint64_t slot) const {
    return 2.0 * std::numbers::pi *
           rng::unit_interval(rng::derive(seed_, k, slot));
  }

  std::size_t num_qubits_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<QubitAngles> angles_;
};

/// Depth-3 circuit: Rz(c_k) on every qubit, then Ry(b_k), then Rz(a_k).
inline Circuit build_local_random_circuit(const LocalRandomSpec& spec) {
  const std::size_t n = spec.num_qubits();
  const auto& ang = spec.per_qubit_angles();
  std::vector<Gate> gs;
  gs.reserve(3 * n);
  for (std::size_t k = 0; k < n; ++k) gs.push_back(gates::rz(k, ang[k].c));
  for (std::size_t k = 0; k < n; ++k) gs.push_back(gates::ry(k, ang[k].b));
  for (std::size_t k = 0; k < n; ++k) gs.push_back(gates::rz(k, ang[k].a));
  return Circuit(n, std::move(gs));
}

/// Amplitude i of the product state in O(n): the product over qubits of the
/// single-qubit component selected by the matching bit of i.
inline complex_t local_state_amplitude(const LocalRandomSpec& spec,
                                       std::uint64_t index) {
  const std::size_t n = spec.num_qubits();
  if (n < 64 && index >= (std::uint64_t{1} << n))
    throw StructuralError("basis index " + std::to_string(index) +
                          " out of range for " + std::to_string(n) + " qubits");
  complex_t amp{1.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t bit = (index >> (n - 1 - k)) & 1U;
    amp *= spec.qubit_state(k)[bit];
  }
  return amp;
}

/// Full 2^n statevector of the spec, built by successive tensor products.
inline Statevector prepare_local_random_state(const LocalRandomSpec& spec) {
  std::vector<complex_t> amps{complex_t{1.0, 0.0}};
  for (std::size_t k = 0; k < spec.num_qubits(); ++k) {
    const auto q = spec.qubit_state(k);
    std::vector<complex_t> next;
    next.reserve(amps.size() * 2);
    for (const auto& a : amps) {
      next.push_back(a * q[0]);
      next.push_back(a * q[1]);
    }
    amps = std::move(next);
  }
  return Statevector(spec.num_qubits(), std::move(amps));
}

}  // namespace rhq
