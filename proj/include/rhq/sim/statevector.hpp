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
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rhq/error.hpp"
#include "rhq/sim/gate.hpp"

namespace rhq {

/// Largest register the dense backend allocates (2^26 amplitudes, 1 GiB).
inline constexpr std::size_t kMaxStatevectorQubits = 26;

/// Dense pure state over n qubits.
///
/// Amplitude index bits follow the tensor order |x_0 x_1 ... x_{n-1}>: qubit 0
/// is the MOST significant bit, qubit n-1 the least significant one. Use
/// bit_of() rather than hand-rolled shifts.
class Statevector {
 public:
  Statevector() = default;

  /// |0...0> on `num_qubits` qubits.
  explicit Statevector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    check_width(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, complex_t{0.0, 0.0});
    amps_[0] = 1.0;
  }

  Statevector(std::size_t num_qubits, std::vector<complex_t> amplitudes)
      : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    check_width(num_qubits);
    if (amps_.size() != (std::size_t{1} << num_qubits))
      throw StructuralError("statevector of " + std::to_string(num_qubits) +
                            " qubits needs 2^n amplitudes, got " +
                            std::to_string(amps_.size()));
  }

  static Statevector basis(std::size_t num_qubits, std::size_t index) {
    Statevector s(num_qubits);
    if (index >= s.dim()) throw StructuralError("basis index out of range");
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
  }

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }

  std::span<const complex_t> amplitudes() const noexcept { return amps_; }
  std::span<complex_t> amplitudes() noexcept { return amps_; }
  const complex_t& operator[](std::size_t i) const { return amps_[i]; }
  complex_t& operator[](std::size_t i) { return amps_[i]; }

  /// Bit mask selecting `qubit` in an amplitude index.
  std::size_t bit_of(Qubit qubit) const noexcept {
    return std::size_t{1} << (num_qubits_ - 1 - qubit);
  }

  /// Sum of squared moduli, accumulated in index order.
  double norm_squared() const noexcept {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
  }

  /// Multiplies every amplitude by `factor`.
  Statevector scaled(complex_t factor) const {
    Statevector out = *this;
    for (auto& a : out.amps_) a *= factor;
    return out;
  }

  /// this (x) other: this state occupies the leading (more significant) qubits.
  Statevector tensor(const Statevector& other) const {
    std::vector<complex_t> out;
    out.reserve(dim() * other.dim());
    for (const auto& a : amps_)
      for (const auto& b : other.amps_) out.push_back(a * b);
    return Statevector(num_qubits_ + other.num_qubits_, std::move(out));
  }

  /// Applies a 2x2 matrix to `target` on the subspace where every qubit in
  /// `controls` is |1>.
  void apply_matrix(const Matrix2& m, Qubit target,
                    const std::vector<Qubit>& controls = {}) {
    const std::size_t tbit = bit_of(target);
    std::size_t cmask = 0;
    for (auto c : controls) cmask |= bit_of(c);
    const std::size_t n = amps_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if ((i & tbit) || (i & cmask) != cmask) continue;
      const complex_t a0 = amps_[i];
      const complex_t a1 = amps_[i | tbit];
      amps_[i] = m[0] * a0 + m[1] * a1;
      amps_[i | tbit] = m[2] * a0 + m[3] * a1;
    }
  }

  void apply_swap(Qubit a, Qubit b, const std::vector<Qubit>& controls = {}) {
    const std::size_t abit = bit_of(a), bbit = bit_of(b);
    std::size_t cmask = 0;
    for (auto c : controls) cmask |= bit_of(c);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      if ((i & cmask) != cmask) continue;
      if ((i & abit) && !(i & bbit)) std::swap(amps_[i], amps_[(i & ~abit) | bbit]);
    }
  }

  friend bool operator==(const Statevector&, const Statevector&) = default;

 private:
  static void check_width(std::size_t n) {
    if (n == 0) throw StructuralError("statevector needs at least one qubit");
    if (n > kMaxStatevectorQubits)
      throw CapabilityError("statevector of " + std::to_string(n) +
                            " qubits exceeds the dense backend limit");
  }

  std::size_t num_qubits_ = 0;
  std::vector<complex_t> amps_;
};

/// <a|b>, accumulated in index order.
inline complex_t inner_product(const Statevector& a, const Statevector& b) {
  if (a.num_qubits() != b.num_qubits())
    throw StructuralError("inner product of states with different qubit counts");
  complex_t s{0.0, 0.0};
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

/// |<a|b>|^2. Symmetric and blind to global phase.
inline double fidelity(const Statevector& a, const Statevector& b) {
  return std::norm(inner_product(a, b));
}

}  // namespace rhq
