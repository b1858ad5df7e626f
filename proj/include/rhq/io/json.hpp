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

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rhq/discriminator/discriminator.hpp"
#include "rhq/engine/check.hpp"
#include "rhq/engine/sweep.hpp"
#include "rhq/error.hpp"
#include "rhq/randstate/local_random.hpp"
#include "rhq/train/train.hpp"
#include "rhq/version.hpp"

// JSON and CSV forms of the library's value types. Layouts are documented in
// docs/FORMATS.md and docs/schema/*.json. Nothing here records wall-clock
// time except RunManifest, so every other artifact is reproducible byte for
// byte.

namespace rhq {

using json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

inline std::string_view to_string(EstimateMode m) {
  return m == EstimateMode::Analytic ? "analytic" : "sampled";
}

inline EstimateMode estimate_mode_from_string(std::string_view s) {
  if (s == "analytic") return EstimateMode::Analytic;
  if (s == "sampled") return EstimateMode::Sampled;
  throw ParameterError("unknown mode '" + std::string(s) + "' (expected analytic or sampled)");
}

inline json to_json(const ParamMap& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

inline json to_json(const LocalRandomSpec& s) {
  return {{"num_qubits", s.num_qubits()}, {"seed", s.seed()}};
}

inline json to_json(const NoiseModel& m) {
  return {{"epsilons", m.epsilons}, {"sigma", m.sigma}, {"seed", m.seed}};
}

inline NoiseModel noise_model_from_json(const json& j) {
  try {
    NoiseModel m;
    m.epsilons = j.at("epsilons").get<std::vector<double>>();
    m.sigma = j.value("sigma", 0.0);
    m.seed = j.value("seed", std::uint64_t{0});
    return m;
  } catch (const json::exception& e) {
    throw ParameterError(std::string("bad noise model JSON: ") + e.what());
  }
}

inline json to_json(const DiscriminatorParams& p) { return {{"thetas", p.thetas}}; }

/// Accepts {"thetas": [...]} or a bare array.
inline DiscriminatorParams discriminator_params_from_json(const json& j) {
  try {
    if (j.is_array()) return {j.get<std::vector<double>>()};
    return {j.at("thetas").get<std::vector<double>>()};
  } catch (const json::exception& e) {
    throw ParameterError(std::string("bad theta JSON: ") + e.what());
  }
}

inline json to_json(const FailureEstimate& e) {
  json j = {{"p_failure", e.p_failure}, {"mode", to_string(e.mode)}};
  if (e.mode == EstimateMode::Sampled) {
    j["shots"] = e.shots;
    j["std_error"] = e.std_error;
  }
  return j;
}

inline json to_json(const CheckConfig& c) {
  json j = {{"num_states", c.num_states},
            {"mode", to_string(c.mode)},
            {"shots", c.shots},
            {"seed", c.seed},
            {"noise", c.noise ? to_json(*c.noise) : json(nullptr)},
            {"discriminator_params", to_json(c.discriminator_params)},
            {"fixed_params", to_json(c.fixed_params)},
            {"param_samples", c.param_samples},
            {"equivalence_threshold", c.equivalence_threshold},
            {"detection_threshold", c.detection_threshold}};
  if (c.free_param_sampling)
    j["free_param_sampling"] = {{"symbols", c.free_param_sampling->symbols},
                                {"low", c.free_param_sampling->low},
                                {"high", c.free_param_sampling->high}};
  else
    j["free_param_sampling"] = nullptr;
  return j;
}

inline json to_json(const TrialRecord& t) {
  return {{"state_index", t.state_index},
          {"param_index", t.param_index},
          {"random_spec", to_json(t.random_spec)},
          {"bindings", to_json(t.bindings)},
          {"estimate", to_json(t.estimate)}};
}

inline json report_to_json(const EquivalenceReport& r, const CheckConfig& config) {
  json trials = json::array();
  for (const auto& t : r.per_trial) trials.push_back(to_json(t));
  return {{"schema_version", kReportSchemaVersion},
          {"num_qubits", r.num_qubits},
          {"config", to_json(config)},
          {"per_trial", std::move(trials)},
          {"mean_p_failure", r.mean_p_failure},
          {"max_p_failure", r.max_p_failure},
          {"std_dev", r.std_dev},
          {"verdict", to_string(r.verdict)},
          {"undetected_bound", r.undetected_bound_applicable ? json(r.undetected_bound)
                                                             : json(nullptr)}};
}

inline json to_json(const TrainOptions& o) {
  return {{"steps", o.steps},
          {"learning_rate", o.learning_rate},
          {"batch", o.batch},
          {"seed", o.seed},
          {"convergence_threshold", o.convergence_threshold},
          {"stop_threshold", o.stop_threshold}};
}

inline json to_json(const TrainLog& log) {
  json records = json::array();
  for (const auto& r : log.records)
    records.push_back({{"step", r.step}, {"p_failure", r.p_failure}, {"parameters", r.parameters}});
  return {{"schema_version", kReportSchemaVersion},
          {"parameter_names", log.parameter_names},
          {"records", std::move(records)},
          {"final_parameters", log.final_parameters},
          {"best_step", log.best_step},
          {"converged", log.converged}};
}

/// Shortest decimal form that reads back to the same double.
inline std::string format_double(double v) {
  char buf[32];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

/// Columns: step,p_failure,<one column per parameter>.
inline std::string train_log_csv(const TrainLog& log) {
  std::string out = "step,p_failure";
  for (const auto& n : log.parameter_names) out += "," + n;
  out += "\n";
  for (const auto& r : log.records) {
    out += std::to_string(r.step) + "," + format_double(r.p_failure);
    for (double p : r.parameters) out += "," + format_double(p);
    out += "\n";
  }
  return out;
}

/// Columns: delta,mean_p_failure,std_dev,max_p_failure.
inline std::string sweep_csv(const std::vector<SweepPoint>& points) {
  std::string out = "delta,mean_p_failure,std_dev,max_p_failure\n";
  for (const auto& p : points)
    out += format_double(p.delta) + "," + format_double(p.mean_p_failure) + "," +
           format_double(p.std_dev) + "," + format_double(p.max_p_failure) + "\n";
  return out;
}

struct BenchRow {
  std::string name;
  std::size_t num_qubits = 0;
  std::size_t num_gates = 0;
  std::size_t depth = 0;
  double p_failure_y = 0.0;
  double p_failure_n = 0.0;
  double seconds = 0.0;
};

inline constexpr const char* kBenchCsvHeader = "name,n,gates,depth,p_failure_Y,p_failure_N,t\n";

inline std::string bench_csv_row(const BenchRow& r) {
  char t[32];
  std::snprintf(t, sizeof t, "%.3f", r.seconds);
  return r.name + "," + std::to_string(r.num_qubits) + "," + std::to_string(r.num_gates) + "," +
         std::to_string(r.depth) + "," + format_double(r.p_failure_y) + "," +
         format_double(r.p_failure_n) + "," + t + "\n";
}

struct RunManifest {
  std::string command;
  json config;
  std::string version = kVersion;
  double runtime_seconds = 0.0;
};

inline json to_json(const RunManifest& m) {
  return {{"schema_version", kReportSchemaVersion},
          {"command", m.command},
          {"config", m.config},
          {"version", m.version},
          {"runtime_seconds", m.runtime_seconds}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

inline void write_json_file(const std::string& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace rhq
