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


// Hand-built counterparts of tests/fixtures/qasm/*.qasm, written directly
// with gate factories. cu1 is written as a directly controlled U1 rather
// than the qelib1 decomposition the parser emits.

#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "rhq/sim/circuit.hpp"
#include "rhq/sim/gate.hpp"

#ifndef RHQ_FIXTURE_DIR
#error "RHQ_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace fixtures {

using namespace rhq::gates;
using rhq::Circuit;
using rhq::Gate;
inline constexpr double pi = std::numbers::pi;

inline std::string qasm_dir() { return std::string(RHQ_FIXTURE_DIR) + "/qasm"; }
inline std::string scale_dir() { return std::string(RHQ_FIXTURE_DIR) + "/scale"; }

inline Gate cu1(rhq::Qubit c, rhq::Qubit t, double lambda) { return controlled(u1(t, lambda), {c}); }

inline std::vector<Gate> rzz(rhq::Qubit a, rhq::Qubit b, double theta) {
  return {cx(a, b), rz(b, theta), cx(a, b)};
}

inline Circuit cat(std::size_t n, std::initializer_list<std::vector<Gate>> parts) {
  std::vector<Gate> gs;
  for (const auto& p : parts) gs.insert(gs.end(), p.begin(), p.end());
  return Circuit(n, std::move(gs));
}

inline std::map<std::string, Circuit> hand_built() {
  std::map<std::string, Circuit> m;
  m.emplace("bell_2", Circuit(2, {h(0), cx(0, 1)}));
  m.emplace("toffoli_3", Circuit(3, {h(0), x(1), t(2), ccx(0, 1, 2), tdg(2), s(0), sdg(1)}));
  {
    std::vector<Gate> layer_h = {h(0), h(1), h(2)};
    std::vector<Gate> layer_x = {x(0), x(1), x(2)};
    std::vector<Gate> ccz = {h(2), ccx(0, 1, 2), h(2)};
    m.emplace("grover_3", cat(3, {layer_h, ccz, layer_h, layer_x, ccz, layer_x, layer_h}));
  }
  m.emplace("bv_4", Circuit(4, {x(3), h(0), h(1), h(2), h(3), cx(0, 3), cx(2, 3), h(0), h(1),
                                h(2)}));
  m.emplace("qft_4", Circuit(4, {h(0), cu1(1, 0, pi / 2), cu1(2, 0, pi / 4), cu1(3, 0, pi / 8),
                                 h(1), cu1(2, 1, pi / 2), cu1(3, 1, pi / 4), h(2),
                                 cu1(3, 2, pi / 2), h(3), swap(0, 3), swap(1, 2)}));
  m.emplace("adder_4",
            Circuit(4, {x(0), h(2), ccx(0, 1, 3), cx(0, 1), ccx(1, 2, 3), cx(2, 1)}));
  m.emplace("qaoa_4", cat(4, {{h(0), h(1), h(2), h(3)},
                              rzz(0, 1, 1.4),
                              rzz(1, 2, 1.4),
                              rzz(2, 3, 1.4),
                              rzz(3, 0, 1.4),
                              {rx(0, 0.7), rx(1, 0.7), rx(2, 0.7), rx(3, 0.7)}}));
  m.emplace("custom_gate_3",
            Circuit(3, {rz(0, 0.3), ry(0, -0.15), cx(0, 1), u3(1, 0.09, std::sin(0.3), std::log(2.0)),
                        rz(1, -1.1), ry(1, 0.55), cx(1, 2), u3(2, 1.21, std::sin(-1.1), std::log(2.0)),
                        cx(2, 0), rz(0, 0.5), u2(1, pi / 4, -pi)}));
  m.emplace("ghz_5", Circuit(5, {h(0), cx(0, 1), cx(1, 2), cx(2, 3), cx(3, 4)}));
  m.emplace("rand_cliff_5",
            Circuit(5, {h(0), s(3), cx(0, 2), h(4), cz(1, 4), sdg(2), cx(3, 1), h(1), swap(0, 4),
                        s(0), cx(2, 3), y(1), z(4), cz(0, 3), h(2), x(0), cx(4, 1)}));
  {
    const double phase = 2 * pi * 5 / 16;
    m.emplace("pe_5", Circuit(5, {x(4), h(0), h(1), h(2), h(3), cu1(3, 4, phase),
                                  cu1(2, 4, 2 * phase), cu1(1, 4, 4 * phase), cu1(0, 4, 8 * phase),
                                  swap(0, 3), swap(1, 2), h(3), cu1(3, 2, -pi / 2), h(2),
                                  cu1(3, 1, -pi / 4), cu1(2, 1, -pi / 2), h(1), cu1(3, 0, -pi / 8),
                                  cu1(2, 0, -pi / 4), cu1(1, 0, -pi / 2), h(0)}));
  }
  {
    std::vector<Gate> gs;
    for (rhq::Qubit q = 0; q < 6; ++q) gs.push_back(ry(q, 0.1 * static_cast<double>(q + 1)));
    for (rhq::Qubit q = 0; q < 6; ++q) gs.push_back(rz(q, 1.0 + 0.1 * static_cast<double>(q + 1)));
    const std::vector<Gate> ent = {cz(0, 1), cz(2, 3), cz(4, 5), cz(1, 2), cz(3, 4)};
    gs.insert(gs.end(), ent.begin(), ent.end());
    for (rhq::Qubit q = 0; q < 6; ++q) {
      const double k = static_cast<double>(q);
      gs.push_back(u3(q, 0.7 + 0.1 * k, 0.1 + 0.1 * k, -0.2 - 0.1 * k));
    }
    gs.insert(gs.end(), ent.begin(), ent.end());
    gs.push_back(u1(0, 0.25));
    gs.push_back(id(3));
    m.emplace("hwe_6", Circuit(6, std::move(gs)));
  }
  m.emplace("broadcast_3", Circuit(3, {h(0), h(1), cx(0, 2), cx(1, 2), rz(0, pi / 3),
                                       rz(1, pi / 3)}));
  return m;
}

}  // namespace fixtures
