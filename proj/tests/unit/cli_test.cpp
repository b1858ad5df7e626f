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
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "rhq/cli/args.hpp"
#include "rhq/io/json.hpp"

#ifndef RHQ_CLI_PATH
#error "RHQ_CLI_PATH must point at the rhq executable"
#endif

namespace rhq {
namespace {

namespace fs = std::filesystem;
constexpr double kPi = std::numbers::pi;

// ------------------------------------------------------------ argument forms

TEST(ParseAngle, PlainAndPiForms) {
  EXPECT_DOUBLE_EQ(cli::parse_angle("1.23"), 1.23);
  EXPECT_DOUBLE_EQ(cli::parse_angle("-0.5"), -0.5);
  EXPECT_DOUBLE_EQ(cli::parse_angle("+2"), 2.0);
  EXPECT_DOUBLE_EQ(cli::parse_angle("pi"), kPi);
  EXPECT_DOUBLE_EQ(cli::parse_angle("-pi"), -kPi);
  EXPECT_DOUBLE_EQ(cli::parse_angle("2pi"), 2 * kPi);
  EXPECT_DOUBLE_EQ(cli::parse_angle("2*pi"), 2 * kPi);
  EXPECT_DOUBLE_EQ(cli::parse_angle("pi/2"), kPi / 2);
  EXPECT_DOUBLE_EQ(cli::parse_angle("3*pi/4"), 3 * kPi / 4);
  EXPECT_DOUBLE_EQ(cli::parse_angle(" 1e-3 "), 1e-3);
}

TEST(ParseAngle, RejectsGarbage) {
  for (const char* s : {"", "abc", "1.2.3", "pi/0", "2**pi", "pi*2", "pix", "1,5"})
    EXPECT_THROW(cli::parse_angle(s), ParameterError) << s;
}

TEST(ParseDeltaGrid, EndpointsAndCount) {
  const auto g = cli::parse_delta_grid("0:2pi:17");
  ASSERT_EQ(g.size(), 17u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_DOUBLE_EQ(g.back(), 2 * kPi);
  EXPECT_DOUBLE_EQ(g[8], kPi);
  EXPECT_EQ(cli::parse_delta_grid("0:0:1"), std::vector<double>{0.0});
  EXPECT_THROW(cli::parse_delta_grid("0:1"), ParameterError);
  EXPECT_THROW(cli::parse_delta_grid("0:1:0"), ParameterError);
  EXPECT_THROW(cli::parse_delta_grid("0:1:-3"), ParameterError);
}

TEST(ParsePosition, RandomAndExplicit) {
  EXPECT_EQ(std::get<RandomPosition>(cli::parse_position("random:42")).seed, 42u);
  const auto e = std::get<ExplicitPosition>(cli::parse_position("3:1"));
  EXPECT_EQ(e.index, 3u);
  EXPECT_EQ(e.qubit, 1u);
  for (const char* s : {"random", "3", "a:b", "random:-1", "1:2:3"})
    EXPECT_THROW(cli::parse_position(s), ParameterError) << s;
}

TEST(ParseInsert, Forms) {
  EXPECT_EQ(cli::parse_insert("id").kind, PerturbationSpec::Kind::InsertIdentity);
  const auto rx = cli::parse_insert("rx:1.23");
  EXPECT_EQ(rx.kind, PerturbationSpec::Kind::InsertGate);
  EXPECT_EQ(rx.gate_kind, GateKind::Rx);
  EXPECT_DOUBLE_EQ(rx.angle, 1.23);
  EXPECT_DOUBLE_EQ(cli::parse_insert("rz:pi/4").angle, kPi / 4);
  EXPECT_EQ(cli::parse_insert("h").gate_kind, GateKind::H);
  for (const char* s : {"rx", "h:1", "cx", "id:1", "foo:1", ""})
    EXPECT_THROW(cli::parse_insert(s), ParameterError) << s;
}

TEST(ParseBinding, NameValue) {
  const auto [n, v] = cli::parse_binding("delta=pi");
  EXPECT_EQ(n, "delta");
  EXPECT_DOUBLE_EQ(v, kPi);
  EXPECT_THROW(cli::parse_binding("delta"), ParameterError);
  EXPECT_THROW(cli::parse_binding("=1"), ParameterError);
}

TEST(ParseU64, DecimalAndHex) {
  EXPECT_EQ(cli::parse_u64("123", "x"), 123u);
  EXPECT_EQ(cli::parse_u64("0xff", "x"), 255u);
  EXPECT_EQ(cli::parse_u64("18446744073709551615", "x"), ~std::uint64_t{0});
  EXPECT_THROW(cli::parse_u64("18446744073709551616", "x"), ParameterError);
  EXPECT_THROW(cli::parse_u64("12a", "x"), ParameterError);
}

TEST(LoadCircuit, BuiltinsAndFiles) {
  EXPECT_EQ(cli::load_circuit("builtin:flipper_a").circuit.num_qubits(), 2u);
  EXPECT_EQ(cli::load_circuit("cry_e").circuit.size(), 5u);
  EXPECT_THROW(cli::load_circuit("builtin:nope"), ParameterError);
  const auto ghz = cli::load_circuit(fixtures::qasm_dir() + "/ghz_5.qasm");
  EXPECT_EQ(ghz.name, "ghz_5");
  EXPECT_FALSE(ghz.warnings.empty());
  EXPECT_THROW(cli::load_circuit("/nonexistent/x.qasm"), Error);
}

// ------------------------------------------------------------- the process

struct ProcessResult {
  int code = -1;
  std::string out;
  std::string err;
};

class CliProcess : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rhq_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  ProcessResult run(const std::string& args, const std::string& env = "") const {
    const std::string out = path("stdout.txt"), err = path("stderr.txt");
    const std::string cmd = env + " \"" RHQ_CLI_PATH "\" " + args + " >\"" + out + "\" 2>\"" +
                            err + "\"";
    const int status = std::system(cmd.c_str());
    ProcessResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  static std::string fixture(const std::string& name) {
    return "\"" + fixtures::qasm_dir() + "/" + name + "\"";
  }

  fs::path dir_;
};

TEST_F(CliProcess, SameFileTwiceIsEquivalent) {
  const auto r = run("check " + fixture("qft_4.qasm") + " " + fixture("qft_4.qasm"));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("verdict: Equivalent"), std::string::npos);
}

TEST_F(CliProcess, PerturbedVariantIsNotEquivalent) {
  const auto p = path("p.qasm");
  ASSERT_EQ(run("perturb " + fixture("qft_4.qasm") + " --insert rx:1.23 --position random:5 --out " + p).code, 0);
  const auto r = run("check " + fixture("qft_4.qasm") + " " + p);
  EXPECT_EQ(r.code, 1) << r.out << r.err;
  EXPECT_NE(r.out.find("verdict: NotEquivalent"), std::string::npos);
}

TEST_F(CliProcess, UncompensatedNoiseIsInconclusive) {
  // Identical circuits read through a noisy, untrained discriminator score
  // about 1e-4: above the equivalence threshold, below detection.
  const auto r = run("check builtin:flipper_a builtin:flipper_a --noise-sigma 0.02");
  EXPECT_EQ(r.code, 2) << r.out << r.err;
}

TEST_F(CliProcess, ErrorClassesExitThree) {
  EXPECT_EQ(run("check " + fixture("qft_4.qasm") + " " + fixture("bell_2.qasm")).code, 3);
  const auto bad = path("bad.qasm");
  { std::ofstream(bad) << "OPENQASM 2.0;\nqreg q[1];\nfoo q[0];\n"; }
  const auto parse = run("check " + bad + " " + bad);
  EXPECT_EQ(parse.code, 3);
  EXPECT_NE(parse.err.find("3:1"), std::string::npos) << parse.err;
  EXPECT_EQ(run("check /nonexistent/a.qasm /nonexistent/a.qasm").code, 3);
  EXPECT_EQ(run("check builtin:flipper_a builtin:flipper_b").code, 3);  // unbound delta
  EXPECT_EQ(run("check builtin:flipper_a builtin:flipper_a --mode exact").code, 3);
  EXPECT_EQ(run("check builtin:flipper_a builtin:flipper_a --states 0").code, 3);
  EXPECT_EQ(run("check builtin:flipper_a builtin:flipper_a --theta-file /nonexistent.json").code, 3);
  EXPECT_EQ(run("check builtin:flipper_a").code, 3);
  EXPECT_EQ(run("frobnicate").code, 3);
  EXPECT_EQ(run("").code, 3);
  EXPECT_EQ(run("check builtin:flipper_a builtin:flipper_a", "RHQ_SEED=abc").code, 3);
  EXPECT_EQ(run("perturb builtin:flipper_a --position 99:0").code, 3);
  EXPECT_EQ(run("perturb builtin:flipper_a --insert cx").code, 3);
  EXPECT_EQ(run("sweep nope").code, 3);
}

TEST_F(CliProcess, HelpAndVersionExitZero) {
  EXPECT_EQ(run("--help").code, 0);
  const auto v = run("--version");
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find(kVersion), std::string::npos);
}

TEST_F(CliProcess, JsonReportAndManifest) {
  const auto rep = path("r.json"), man = path("m.json");
  ASSERT_EQ(run("check builtin:cry_d builtin:cry_e --bind delta=0 --param-samples 3 --states 5"
                " --json " + rep + " --manifest " + man).code, 0);
  const json j = read_json_file(rep);
  EXPECT_EQ(j["per_trial"].size(), 15u);
  EXPECT_EQ(j["verdict"], "Equivalent");
  const json m = read_json_file(man);
  EXPECT_EQ(m["command"], "check");
  EXPECT_EQ(m["version"], kVersion);
  EXPECT_GE(m["runtime_seconds"].get<double>(), 0.0);
}

TEST_F(CliProcess, AnalyticReportsAreByteIdentical) {
  const auto a = path("a.json"), b = path("b.json");
  const std::string args = "check builtin:flipper_a builtin:flipper_b --bind delta=1 --states 20 --json ";
  ASSERT_EQ(run(args + a).code, 1);
  ASSERT_EQ(run(args + b).code, 1);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST_F(CliProcess, SeedEnvironmentVariable) {
  const auto a = path("a.json"), b = path("b.json"), c = path("c.json");
  const std::string args = "check builtin:flipper_a builtin:flipper_b --bind delta=1 --states 3 --json ";
  run(args + a, "RHQ_SEED=17");
  run(args + b + " --seed 17");
  run(args + c);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_NE(slurp(a), slurp(c));
}

TEST_F(CliProcess, SampledModeReportsBound) {
  const auto r = run("check builtin:flipper_a builtin:flipper_a --mode sampled --shots 100 --states 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("undetected_bound: "), std::string::npos);
  EXPECT_EQ(r.out.find("undetected_bound: n/a"), std::string::npos);
}

TEST_F(CliProcess, TrainDiscWithoutNoiseStaysAtZero) {
  const auto log = path("d.csv");
  const auto r = run("train-disc --pairs 2 --noise-sigma 0 --steps 10 --log " + log);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("final_p_failure: 0\n"), std::string::npos) << r.out;
  const std::string text = slurp(log);
  EXPECT_EQ(text.substr(0, text.find('\n')), "step,p_failure,theta_0,theta_1,theta_2,theta_3");
}

TEST_F(CliProcess, TrainDiscThetasCompensateInCheck) {
  const auto t = path("t.json");
  const auto tr = run("train-disc --pairs 2 --noise-sigma 0.02 --theta-out " + t);
  ASSERT_EQ(tr.code, 0);
  EXPECT_NE(tr.out.find("converged: true"), std::string::npos);
  const json j = read_json_file(t);
  EXPECT_EQ(j["thetas"].size(), 4u);
  EXPECT_EQ(j["noise"]["sigma"], 0.02);
  // The theta file carries its noise model, so the noisy check now passes.
  EXPECT_EQ(run("check builtin:flipper_a builtin:flipper_a --theta-file " + t).code, 0);
}

TEST_F(CliProcess, TrainDiscLogsAreReproducible) {
  const auto a = path("a.json"), b = path("b.json");
  run("train-disc --seed 4 --log " + a);
  run("train-disc --seed 4 --log " + b);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_TRUE(read_json_file(a)["converged"].get<bool>());
}

TEST_F(CliProcess, ReconstructFlipper) {
  const auto log = path("g.json");
  const auto r = run("reconstruct flipper_a flipper_ansatz --steps 500 --log " + log);
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("converged: true"), std::string::npos);
  EXPECT_NE(r.out.find("verdict: Equivalent"), std::string::npos);
  EXPECT_LE(read_json_file(log)["records"].size(), 501u);
}

TEST_F(CliProcess, ReconstructIdentityAndZeroSteps) {
  const auto id = run("reconstruct identity_1 ry_ansatz_1");
  EXPECT_EQ(id.code, 0);
  EXPECT_NE(id.out.find("converged: true"), std::string::npos);
  const auto zero = run("reconstruct flipper_a flipper_ansatz --steps 0");
  EXPECT_EQ(zero.code, 1);
  EXPECT_NE(zero.out.find("converged: false"), std::string::npos);
  EXPECT_NE(zero.out.find("param beta0: 0\n"), std::string::npos);
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string c;
    while (std::getline(cells, c, ',')) row.push_back(std::strtod(c.c_str(), nullptr));
    rows.push_back(row);
  }
  return rows;
}

TEST_F(CliProcess, SweepFlipperShape) {
  const auto r = run("sweep flipper --delta-grid 0:2pi:9");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "delta,mean_p_failure,std_dev,max_p_failure");
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_LT(rows.front()[1], 1e-10);
  EXPECT_LT(rows.back()[1], 1e-10);
  std::size_t arg = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i][1] > rows[arg][1]) arg = i;
  EXPECT_EQ(arg, 4u);  // delta = pi
}

TEST_F(CliProcess, SweepCryEndpointsAndSinglePoint) {
  const auto csv = path("s.csv");
  ASSERT_EQ(run("sweep cry --delta-grid 0:2pi:5 --states 10 --betas 10 --csv " + csv).code, 0);
  const auto rows = csv_rows(slurp(csv));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_LT(rows.front()[1], 1e-10);
  EXPECT_LT(rows.back()[1], 1e-10);
  EXPECT_GT(rows[2][1], 0.1);
  const auto one = csv_rows(run("sweep flipper --delta-grid 0:0:1").out);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_LT(one[0][1], 1e-10);
}

TEST_F(CliProcess, BenchSkipsBrokenFiles) {
  for (const char* f : {"bell_2.qasm", "toffoli_3.qasm", "qft_4.qasm"})
    fs::copy_file(fixtures::qasm_dir() + "/" + f, dir_ / f);
  { std::ofstream(dir_ / "broken.qasm") << "OPENQASM 2.0;\nqreg q[2];\ncx q[0];\n"; }
  const auto csv = path("bench.csv");
  const auto r = run("bench " + dir_.string() + " --states 20 --seed 3 --csv " + csv);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("skipping"), std::string::npos);
  const std::string text = slurp(csv);
  EXPECT_EQ(text.substr(0, text.find('\n') + 1), kBenchCsvHeader);
  const auto rows = csv_rows(text);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    EXPECT_LT(row[4], 1e-10);
    EXPECT_GT(row[5], 0.05);
  }
}

TEST_F(CliProcess, BenchEmptyDirectoryIsError) {
  EXPECT_EQ(run("bench " + dir_.string()).code, 3);
  EXPECT_EQ(run("bench /nonexistent/dir").code, 3);
}

TEST_F(CliProcess, PerturbIdentityAndExplicitPosition) {
  const auto out = path("p.qasm");
  ASSERT_EQ(run("perturb " + fixture("bell_2.qasm") + " --insert id --position 1:0 --out " + out).code, 0);
  const std::string text = slurp(out);
  EXPECT_NE(text.find("id q[0];"), std::string::npos) << text;
  EXPECT_EQ(run("check " + fixture("bell_2.qasm") + " " + out).code, 0);
  const auto rx = run("perturb " + fixture("bell_2.qasm") + " --insert rx:1.23 --position 2:1");
  EXPECT_EQ(rx.code, 0);
  EXPECT_NE(rx.out.find("rx(1.23) q[1];"), std::string::npos) << rx.out;
}

TEST_F(CliProcess, PerturbRandomPositionIsSeeded) {
  const auto a = run("perturb " + fixture("qft_4.qasm") + " --position random:9");
  const auto b = run("perturb " + fixture("qft_4.qasm") + " --position random:9");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, b.err);
}

}  // namespace
}  // namespace rhq
