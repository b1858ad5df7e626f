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

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rhq/error.hpp"
#include "rhq/sim/gate.hpp"
#include "rhq/sim/param.hpp"

namespace rhq {

/// Immutable gate sequence over a fixed register. The symbol list is derived
/// from the gates (order of first appearance), so it can never contain unused
/// names or miss referenced ones.
class Circuit {
 public:
  Circuit() = default;

  explicit Circuit(std::size_t num_qubits, std::vector<Gate> gates = {})
      : num_qubits_(num_qubits), gates_(std::move(gates)) {
    if (num_qubits_ == 0) throw StructuralError("circuit needs at least one qubit");
    for (const auto& g : gates_) {
      g.validate(num_qubits_);
      for (const auto& e : g.angles)
        if (e.symbol && std::find(symbols_.begin(), symbols_.end(), *e.symbol) ==
                            symbols_.end())
          symbols_.push_back(*e.symbol);
    }
  }

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }
  bool is_parameterized() const noexcept { return !symbols_.empty(); }

  bool has_symbol(std::string_view name) const {
    return std::find(symbols_.begin(), symbols_.end(), name) != symbols_.end();
  }

  /// Number of layers when every gate is scheduled as early as possible.
  std::size_t depth() const {
    std::vector<std::size_t> level(num_qubits_, 0);
    std::size_t d = 0;
    for (const auto& g : gates_) {
      std::size_t l = 0;
      for (auto q : g.qubits()) l = std::max(l, level[q]);
      ++l;
      for (auto q : g.qubits()) level[q] = l;
      d = std::max(d, l);
    }
    return d;
  }

  Circuit appended(const Gate& g) const {
    auto gs = gates_;
    gs.push_back(g);
    return Circuit(num_qubits_, std::move(gs));
  }

  /// This circuit followed by `other` (same register).
  Circuit appended(const Circuit& other) const {
    if (other.num_qubits_ != num_qubits_)
      throw StructuralError("cannot concatenate circuits of different widths");
    auto gs = gates_;
    gs.insert(gs.end(), other.gates_.begin(), other.gates_.end());
    return Circuit(num_qubits_, std::move(gs));
  }

  /// New circuit with `g` placed before the gate currently at `position`
  /// (position == size() appends).
  Circuit inserted(std::size_t position, const Gate& g) const {
    if (position > gates_.size())
      throw PositionError("insert position " + std::to_string(position) +
                          " beyond circuit of " + std::to_string(gates_.size()) +
                          " gates");
    auto gs = gates_;
    gs.insert(gs.begin() + static_cast<std::ptrdiff_t>(position), g);
    return Circuit(num_qubits_, std::move(gs));
  }

  /// Substitutes every symbol bound in `params`; unbound symbols stay free.
  Circuit bound(const ParamMap& params) const {
    auto gs = gates_;
    for (auto& g : gs)
      for (auto& e : g.angles) e = e.bound(params);
    return Circuit(num_qubits_, std::move(gs));
  }

  /// Circuit of the inverse unitary.
  Circuit adjoint() const {
    std::vector<Gate> gs;
    gs.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it)
      gs.push_back(it->adjoint());
    return Circuit(num_qubits_, std::move(gs));
  }

  /// Copy whose gate `index` has angle `arg` shifted by `delta`.
  Circuit with_shifted_angle(std::size_t index, std::size_t arg,
                             double delta) const {
    auto gs = gates_;
    gs.at(index).angles.at(arg) = gs[index].angles[arg].shifted(delta);
    return Circuit(num_qubits_, std::move(gs));
  }

  /// Throws ParameterError if some circuit symbol is not bound in `params`.
  void require_bound(const ParamMap& params) const {
    for (const auto& s : symbols_)
      if (!params.contains(s))
        throw ParameterError("unbound parameter symbol '" + s + "'");
  }

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.num_qubits_ == b.num_qubits_ && a.gates_ == b.gates_;
  }

 private:
  std::size_t num_qubits_ = 0;
  std::vector<Gate> gates_;
  std::vector<std::string> symbols_;
};

}  // namespace rhq
