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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>

#include "rhq/engine/builtin.hpp"
#include "rhq/io/json.hpp"

namespace rhq {
namespace {

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n') + 1); }

TEST(FormatDouble, RoundTripsRandomValues) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int i = 0; i < 2000; ++i) {
    const double v = std::ldexp(mant(gen), expo(gen));
    EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v) << format_double(v);
  }
}

TEST(FormatDouble, ShortFormsForSimpleValues) {
  EXPECT_EQ(format_double(0.0), "0");
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(-2.0), "-2");
  EXPECT_EQ(format_double(1e-10), "1e-10");
}

TEST(NoiseJson, RoundTrip) {
  const NoiseModel m = sample_noise(3, 0.02, 11);
  EXPECT_EQ(noise_model_from_json(json::parse(to_json(m).dump())), m);
}

TEST(NoiseJson, MissingEpsilonsIsParameterError) {
  EXPECT_THROW(noise_model_from_json(json::parse(R"({"sigma": 0.1})")), ParameterError);
}

TEST(ThetaJson, ObjectAndBareArrayForms) {
  const DiscriminatorParams p{{0.1, -0.2, 0.3, -0.4}};
  EXPECT_EQ(discriminator_params_from_json(json::parse(to_json(p).dump())), p);
  EXPECT_EQ(discriminator_params_from_json(json::parse("[0.1, -0.2, 0.3, -0.4]")), p);
  EXPECT_THROW(discriminator_params_from_json(json::parse(R"({"x": 1})")), ParameterError);
  EXPECT_THROW(discriminator_params_from_json(json::parse(R"(["a"])")), ParameterError);
}

TEST(ReportJson, AnalyticFieldsAndNullBound) {
  CheckConfig cfg;
  cfg.num_states = 5;
  cfg.seed = 3;
  const auto r = check_equivalence(builtin::flipper_a(), builtin::flipper_a(), cfg);
  const json j = report_to_json(r, cfg);
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["num_qubits"], 2);
  EXPECT_EQ(j["verdict"], "Equivalent");
  EXPECT_TRUE(j["undetected_bound"].is_null());
  EXPECT_EQ(j["per_trial"].size(), 5u);
  EXPECT_EQ(j["config"]["mode"], "analytic");
  EXPECT_TRUE(j["config"]["noise"].is_null());
  const auto& t0 = j["per_trial"][0];
  EXPECT_EQ(t0["random_spec"]["num_qubits"], 2);
  EXPECT_EQ(t0["estimate"]["mode"], "analytic");
  EXPECT_FALSE(t0["estimate"].contains("shots"));
}

TEST(ReportJson, SampledCarriesBoundAndShots) {
  CheckConfig cfg;
  cfg.num_states = 4;
  cfg.mode = EstimateMode::Sampled;
  cfg.shots = 10;
  const auto r = check_equivalence(builtin::flipper_a(), builtin::flipper_a(), cfg);
  const json j = report_to_json(r, cfg);
  ASSERT_TRUE(j["undetected_bound"].is_number());
  EXPECT_DOUBLE_EQ(j["undetected_bound"].get<double>(), worst_case_undetected(2, 40));
  EXPECT_EQ(j["per_trial"][0]["estimate"]["shots"], 10);
}

TEST(ReportJson, IdenticalRunsDumpIdentically) {
  CheckConfig cfg;
  cfg.num_states = 8;
  cfg.seed = 99;
  cfg.fixed_params.set(kDelta, 1.0);
  const auto a = report_to_json(
      check_equivalence(builtin::flipper_a(), builtin::flipper_b(), cfg), cfg).dump(2);
  const auto b = report_to_json(
      check_equivalence(builtin::flipper_a(), builtin::flipper_b(), cfg), cfg).dump(2);
  EXPECT_EQ(a, b);
  cfg.seed = 100;
  const auto c = report_to_json(
      check_equivalence(builtin::flipper_a(), builtin::flipper_b(), cfg), cfg).dump(2);
  EXPECT_NE(a, c);
}

TEST(TrainLogCsv, HeaderAndRowCount) {
  TrainOptions o;
  o.steps = 6;
  o.stop_threshold = 0.0;
  const auto [params, log] =
      train_generator(builtin::flipper_a(), builtin::flipper_ansatz(), {}, std::nullopt, o);
  const std::string csv = train_log_csv(log);
  EXPECT_EQ(first_line(csv), "step,p_failure,beta0,beta1\n");
  EXPECT_EQ(count_lines(csv), 8u);
  const json j = to_json(log);
  EXPECT_EQ(j["records"].size(), 7u);
  EXPECT_EQ(j["parameter_names"], json({"beta0", "beta1"}));
  EXPECT_FALSE(j["converged"].get<bool>());
}

TEST(TrainLogCsv, ValuesReadBackExactly) {
  TrainOptions o;
  o.steps = 3;
  const auto [d, log] = train_discriminator(2, sample_noise(2, 0.02, 1), o);
  std::istringstream in(train_log_csv(log));
  std::string line;
  std::getline(in, line);
  for (const auto& r : log.records) {
    ASSERT_TRUE(std::getline(in, line));
    std::istringstream row(line);
    std::string cell;
    std::getline(row, cell, ',');
    EXPECT_EQ(std::stoul(cell), r.step);
    std::getline(row, cell, ',');
    EXPECT_EQ(std::strtod(cell.c_str(), nullptr), r.p_failure);
    for (double p : r.parameters) {
      std::getline(row, cell, ',');
      EXPECT_EQ(std::strtod(cell.c_str(), nullptr), p);
    }
  }
}

TEST(SweepCsv, FixedColumns) {
  const std::vector<SweepPoint> pts = {{0.0, 0.0, 0.0, 0.0}, {1.5, 0.25, 0.01, 0.3}};
  EXPECT_EQ(sweep_csv(pts),
            "delta,mean_p_failure,std_dev,max_p_failure\n0,0,0,0\n1.5,0.25,0.01,0.3\n");
}

TEST(BenchCsv, RowLayout) {
  EXPECT_EQ(std::string(kBenchCsvHeader), "name,n,gates,depth,p_failure_Y,p_failure_N,t\n");
  EXPECT_EQ(bench_csv_row({"qft_4", 4, 12, 8, 0.0, 0.25, 1.23456}),
            "qft_4,4,12,8,0,0.25,1.235\n");
}

TEST(Manifest, CarriesVersionAndConfig) {
  RunManifest m{"check", json{{"seed", 5}}, kVersion, 0.5};
  const json j = to_json(m);
  EXPECT_EQ(j["command"], "check");
  EXPECT_EQ(j["version"], kVersion);
  EXPECT_EQ(j["config"]["seed"], 5);
}

TEST(Files, WriteThenReadJson) {
  const auto path = std::filesystem::temp_directory_path() / "rhq_io_test.json";
  const json j = {{"a", 1}, {"b", {1.5, 2.5}}};
  write_json_file(path.string(), j);
  EXPECT_EQ(read_json_file(path.string()), j);
  std::filesystem::remove(path);
}

TEST(Files, MissingAndMalformedInputs) {
  EXPECT_THROW(read_json_file("/nonexistent/rhq.json"), Error);
  const auto path = std::filesystem::temp_directory_path() / "rhq_io_bad.json";
  write_text_file(path.string(), "{not json");
  EXPECT_THROW(read_json_file(path.string()), Error);
  std::filesystem::remove(path);
}

TEST(ModeNames, RoundTrip) {
  for (auto m : {EstimateMode::Analytic, EstimateMode::Sampled})
    EXPECT_EQ(estimate_mode_from_string(to_string(m)), m);
  EXPECT_THROW(estimate_mode_from_string("exact"), ParameterError);
}

}  // namespace
}  // namespace rhq
