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

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <variant>
#include <vector>

#include "rhq/engine/builtin.hpp"
#include "rhq/engine/sweep.hpp"
#include "rhq/error.hpp"
#include "rhq/qasm/parser.hpp"
#include "rhq/qasm/perturb.hpp"
#include "rhq/sim/circuit.hpp"

// Text forms of command-line arguments. Everything here throws
// ParameterError on malformed input so the CLI can map it to exit code 3.

namespace rhq::cli {

inline constexpr int kExitEquivalent = 0;
inline constexpr int kExitNotEquivalent = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitError = 3;

inline int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return kExitEquivalent;
    case Verdict::NotEquivalent: return kExitNotEquivalent;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitError;
}

namespace detail {

inline std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

inline std::optional<double> to_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace detail

/// Unsigned 64-bit integer, decimal or 0x-prefixed hex.
inline std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  const std::string s = detail::trim(text);
  int base = 10;
  std::string_view digits = s;
  if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    base = 16;
    digits.remove_prefix(2);
  }
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v, base);
  if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size())
    throw ParameterError(std::string(what) + ": '" + s + "' is not an unsigned integer");
  return v;
}

/// A real number, optionally written with pi: "1.5", "pi", "-pi/2", "2pi",
/// "0.5*pi", "3*pi/4".
inline double parse_angle(std::string_view text) {
  const std::string s = detail::trim(text);
  const auto bad = [&] { return ParameterError("'" + s + "' is not a number or multiple of pi"); };
  const auto at = s.find("pi");
  if (at == std::string::npos) {
    if (auto v = detail::to_double(s)) return *v;
    throw bad();
  }
  std::string head = s.substr(0, at);
  std::string tail = s.substr(at + 2);
  if (!head.empty() && head.back() == '*') head.pop_back();
  double factor = 1.0;
  if (head == "-") {
    factor = -1.0;
  } else if (!head.empty() && head != "+") {
    const auto v = detail::to_double(head);
    if (!v) throw bad();
    factor = *v;
  }
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw bad();
    const auto v = detail::to_double(std::string_view(tail).substr(1));
    if (!v || *v == 0.0) throw bad();
    divisor = *v;
  }
  return factor * std::numbers::pi / divisor;
}

/// "a:b:count" to `count` evenly spaced points from a to b inclusive.
inline std::vector<double> parse_delta_grid(std::string_view text) {
  const auto parts = detail::split(text, ':');
  if (parts.size() != 3)
    throw ParameterError("delta grid '" + std::string(text) + "' is not of the form a:b:count");
  const auto count = parse_u64(parts[2], "delta grid point count");
  if (count == 0) throw ParameterError("delta grid needs at least one point");
  return linear_grid(parse_angle(parts[0]), parse_angle(parts[1]), count);
}

/// "random:SEED" or "INDEX:QUBIT".
inline std::variant<ExplicitPosition, RandomPosition> parse_position(std::string_view text) {
  const auto parts = detail::split(text, ':');
  if (parts.size() != 2)
    throw ParameterError("position '" + std::string(text) +
                         "' is not of the form random:SEED or INDEX:QUBIT");
  if (parts[0] == "random") return RandomPosition{parse_u64(parts[1], "position seed")};
  return ExplicitPosition{parse_u64(parts[0], "position index"),
                          parse_u64(parts[1], "position qubit")};
}

/// "id", a fixed single-qubit gate ("x", "h", ...) or a rotation with its
/// angle ("rx:1.23", "rz:pi/4"). The position is filled in separately.
inline PerturbationSpec parse_insert(std::string_view text) {
  const auto parts = detail::split(text, ':');
  const std::string& name = parts[0];
  if (name == "id" && parts.size() == 1) return PerturbationSpec::identity(RandomPosition{});
  static constexpr GateKind kCandidates[] = {
      GateKind::X,  GateKind::Y,  GateKind::Z,  GateKind::H,  GateKind::S, GateKind::Sdg,
      GateKind::T,  GateKind::Tdg, GateKind::Rx, GateKind::Ry, GateKind::Rz, GateKind::U1};
  for (GateKind k : kCandidates) {
    if (gate_name(k) != name) continue;
    const std::size_t want = angle_count(k);
    if (parts.size() != want + 1)
      throw ParameterError("insert '" + std::string(text) + "': gate " + name +
                           (want ? " needs an angle (e.g. " + name + ":1.23)" : " takes no angle"));
    return PerturbationSpec::gate(k, want ? parse_angle(parts[1]) : 0.0, RandomPosition{});
  }
  throw ParameterError("insert '" + std::string(text) +
                       "': expected id, a single-qubit gate, or rx/ry/rz/u1:ANGLE");
}

/// "name=value" binding for a circuit symbol.
inline std::pair<std::string, double> parse_binding(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0)
    throw ParameterError("binding '" + std::string(text) + "' is not of the form name=value");
  return {detail::trim(text.substr(0, eq)), parse_angle(text.substr(eq + 1))};
}

/// Value of RHQ_SEED, or `fallback` when unset or empty.
inline std::uint64_t default_seed(std::uint64_t fallback = 0) {
  const char* env = std::getenv("RHQ_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  return parse_u64(env, "RHQ_SEED");
}

struct LoadedCircuit {
  std::string name;
  Circuit circuit;
  std::vector<std::string> warnings;
};

/// "builtin:NAME", a bare builtin name that is not an existing file, or a
/// path to an OpenQASM 2.0 file.
inline LoadedCircuit load_circuit(const std::string& spec) {
  constexpr std::string_view kPrefix = "builtin:";
  if (spec.starts_with(kPrefix)) {
    const std::string name = spec.substr(kPrefix.size());
    return {name, builtin_circuit(name), {}};
  }
  if (!std::filesystem::exists(spec)) {
    for (const auto& b : builtin_names())
      if (b == spec) return {spec, builtin_circuit(spec), {}};
  }
  auto prog = parse_qasm_file(spec);
  return {std::filesystem::path(spec).stem().string(), std::move(prog.circuit),
          std::move(prog.warnings)};
}

}  // namespace rhq::cli
