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
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "rhq/error.hpp"

namespace rhq {

/// Binding of parameter symbols to angles in radians. Ordered by name so that
/// iteration (and anything serialized from it) is deterministic.
class ParamMap {
 public:
  using container = std::map<std::string, double, std::less<>>;

  ParamMap() = default;
  ParamMap(std::initializer_list<std::pair<const std::string, double>> init)
      : values_(init) {}

  ParamMap& set(std::string name, double value) {
    values_[std::move(name)] = value;
    return *this;
  }

  bool contains(std::string_view name) const {
    return values_.find(name) != values_.end();
  }

  double at(std::string_view name) const {
    auto it = values_.find(name);
    if (it == values_.end()) {
      throw ParameterError("unbound parameter symbol '" + std::string(name) +
                           "'");
    }
    return it->second;
  }

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  /// Entries of `other` override entries of this map.
  ParamMap merged(const ParamMap& other) const {
    ParamMap out = *this;
    for (const auto& [k, v] : other.values_) out.values_[k] = v;
    return out;
  }

  friend bool operator==(const ParamMap&, const ParamMap&) = default;

 private:
  container values_;
};

/// Angle argument of a gate: `coeff * symbol + offset`, or just `offset` when
/// no symbol is referenced.
struct ParamExpr {
  std::optional<std::string> symbol;
  double coeff = 1.0;
  double offset = 0.0;

  static ParamExpr literal(double value) { return ParamExpr{std::nullopt, 1.0, value}; }
  static ParamExpr sym(std::string name, double coeff = 1.0,
                       double offset = 0.0) {
    return ParamExpr{std::move(name), coeff, offset};
  }

  bool is_symbolic() const noexcept { return symbol.has_value(); }

  double evaluate(const ParamMap& params) const {
    if (!symbol) return offset;
    return coeff * params.at(*symbol) + offset;
  }

  /// Replaces the symbol (if bound in `params`) by its value.
  ParamExpr bound(const ParamMap& params) const {
    if (!symbol || !params.contains(*symbol)) return *this;
    return literal(evaluate(params));
  }

  ParamExpr negated() const { return ParamExpr{symbol, -coeff, -offset}; }

  ParamExpr shifted(double delta) const {
    return ParamExpr{symbol, coeff, offset + delta};
  }

  friend bool operator==(const ParamExpr&, const ParamExpr&) = default;
};

}  // namespace rhq
