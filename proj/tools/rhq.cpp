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


// rhq: equivalence checks, discriminator and generator training, delta
// sweeps, perturbations and the benchmark harness from the command line.
//
// Exit codes: 0 Equivalent, 1 NotEquivalent, 2 Inconclusive, 3 any error.
// Commands without a verdict exit 0 on success.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rhq/rhq.hpp"

namespace fs = std::filesystem;

namespace {

using rhq::json;
using Clock = std::chrono::steady_clock;

struct NoiseFlags {
  std::optional<double> sigma;
  std::optional<std::uint64_t> seed;
};

void add_noise_flags(CLI::App* cmd, NoiseFlags& f, const std::string& sigma_help) {
  cmd->add_option("--noise-sigma", f.sigma, sigma_help);
  cmd->add_option("--noise-seed", f.seed, "Seed of the sampled CZ noise angles (default: --seed)");
}

rhq::NoiseModel make_noise(std::size_t n_pairs, double sigma, std::optional<std::uint64_t> noise_seed,
                           std::uint64_t seed) {
  return rhq::sample_noise(n_pairs, sigma, noise_seed.value_or(seed));
}

void print_warnings(const rhq::cli::LoadedCircuit& c) {
  for (const auto& w : c.warnings) std::cerr << "warning: " << c.name << ": " << w << "\n";
}

void write_manifest(const std::string& path, const std::string& command, const json& config,
                    Clock::time_point start) {
  if (path.empty()) return;
  rhq::RunManifest m;
  m.command = command;
  m.config = config;
  m.runtime_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  rhq::write_json_file(path, rhq::to_json(m));
}

void print_report(const rhq::EquivalenceReport& r) {
  std::cout << "verdict: " << rhq::to_string(r.verdict) << "\n"
            << "mean_p_failure: " << rhq::format_double(r.mean_p_failure) << "\n"
            << "max_p_failure: " << rhq::format_double(r.max_p_failure) << "\n"
            << "std_dev: " << rhq::format_double(r.std_dev) << "\n"
            << "trials: " << r.per_trial.size() << "\n"
            << "undetected_bound: "
            << (r.undetected_bound_applicable ? rhq::format_double(r.undetected_bound) : "n/a")
            << "\n";
}

/// Options shared by commands that end in an equivalence check.
struct CheckFlags {
  std::size_t states = 100;
  std::string mode = "analytic";
  std::size_t shots = 1000;
  NoiseFlags noise;
  std::string theta_file;
  std::vector<std::string> bindings;
  std::size_t param_samples = 0;
  std::string json_out;
};

void add_check_flags(CLI::App* cmd, CheckFlags& f) {
  cmd->add_option("--states", f.states, "Number of local random input states")
      ->capture_default_str();
  cmd->add_option("--mode", f.mode, "analytic or sampled")->capture_default_str();
  cmd->add_option("--shots", f.shots, "Shots per trial in sampled mode")->capture_default_str();
  add_noise_flags(cmd, f.noise,
                  "Coherent CZ noise in the discriminator (default 0, or the noise stored "
                  "in --theta-file)");
  cmd->add_option("--theta-file", f.theta_file, "Discriminator angles (JSON from train-disc)");
  cmd->add_option("--bind", f.bindings, "Fix a circuit symbol, NAME=VALUE (repeatable)");
  cmd->add_option("--param-samples", f.param_samples,
                  "Sample free symbols uniformly on [0, 2pi) this many times per state");
  cmd->add_option("--json", f.json_out, "Write the EquivalenceReport JSON here");
}

rhq::CheckConfig make_check_config(const CheckFlags& f, std::size_t n, std::uint64_t seed) {
  rhq::CheckConfig cfg;
  cfg.num_states = f.states;
  cfg.mode = rhq::estimate_mode_from_string(f.mode);
  cfg.shots = f.shots;
  cfg.seed = seed;
  std::optional<rhq::NoiseModel> stored_noise;
  if (!f.theta_file.empty()) {
    const json j = rhq::read_json_file(f.theta_file);
    cfg.discriminator_params = rhq::discriminator_params_from_json(j);
    if (j.is_object() && j.contains("noise") && !j["noise"].is_null())
      stored_noise = rhq::noise_model_from_json(j["noise"]);
  }
  if (f.noise.sigma) {
    if (*f.noise.sigma > 0.0) cfg.noise = make_noise(n, *f.noise.sigma, f.noise.seed, seed);
  } else if (stored_noise) {
    cfg.noise = stored_noise;
  }
  for (const auto& b : f.bindings) {
    const auto [name, value] = rhq::cli::parse_binding(b);
    cfg.fixed_params.set(name, value);
  }
  if (f.param_samples > 0) {
    cfg.free_param_sampling = rhq::FreeParamSampling{};
    cfg.param_samples = f.param_samples;
  }
  return cfg;
}

int finish_check(const rhq::EquivalenceReport& r, const rhq::CheckConfig& cfg,
                 const std::string& json_out) {
  print_report(r);
  if (!json_out.empty()) rhq::write_json_file(json_out, rhq::report_to_json(r, cfg));
  return rhq::cli::exit_code(r.verdict);
}

// ---------------------------------------------------------------- check

struct CheckCmd {
  std::string ref, gen;
  std::optional<std::uint64_t> seed;
  CheckFlags flags;
};

int run_check(const CheckCmd& c, const std::string& manifest) {
  const auto start = Clock::now();
  const auto ref = rhq::cli::load_circuit(c.ref);
  const auto gen = rhq::cli::load_circuit(c.gen);
  print_warnings(ref);
  print_warnings(gen);
  const std::uint64_t seed = c.seed.value_or(rhq::cli::default_seed());
  const auto cfg = make_check_config(c.flags, ref.circuit.num_qubits(), seed);
  const auto report = rhq::check_equivalence(ref.circuit, gen.circuit, cfg);
  const int code = finish_check(report, cfg, c.flags.json_out);
  write_manifest(manifest, "check",
                 {{"reference", c.ref}, {"generator", c.gen}, {"check", rhq::to_json(cfg)}},
                 start);
  return code;
}

// ----------------------------------------------------------- train-disc

struct TrainDiscCmd {
  std::size_t pairs = 2;
  NoiseFlags noise;
  std::size_t steps = 500;
  double lr = 0.1;
  std::optional<std::uint64_t> seed;
  bool full_budget = false;
  std::string log;
  std::string theta_out;
};

void write_log(const std::string& path, const rhq::TrainLog& log) {
  if (path.empty()) return;
  if (fs::path(path).extension() == ".json")
    rhq::write_json_file(path, rhq::to_json(log));
  else
    rhq::write_text_file(path, rhq::train_log_csv(log));
}

void print_train_summary(const rhq::TrainLog& log) {
  std::cout << "steps: " << log.records.back().step << "\n"
            << "initial_p_failure: " << rhq::format_double(log.initial_p_failure()) << "\n"
            << "final_p_failure: " << rhq::format_double(log.final_p_failure()) << "\n"
            << "best_step: " << log.best_step << "\n"
            << "converged: " << (log.converged ? "true" : "false") << "\n";
}

int run_train_disc(const TrainDiscCmd& c, const std::string& manifest) {
  const auto start = Clock::now();
  if (c.pairs == 0) throw rhq::ParameterError("--pairs must be >= 1");
  const std::uint64_t seed = c.seed.value_or(rhq::cli::default_seed());
  const auto noise = make_noise(c.pairs, c.noise.sigma.value_or(0.02), c.noise.seed, seed);
  rhq::TrainOptions opts;
  opts.steps = c.steps;
  opts.learning_rate = c.lr;
  opts.seed = seed;
  if (c.full_budget) opts.stop_threshold = 0.0;
  const auto [params, log] = rhq::train_discriminator(c.pairs, noise, opts);
  print_train_summary(log);
  std::cout << "thetas:";
  for (double t : params.thetas) std::cout << " " << rhq::format_double(t);
  std::cout << "\n";
  write_log(c.log, log);
  if (!c.theta_out.empty()) {
    json j = rhq::to_json(params);
    j["noise"] = rhq::to_json(noise);
    rhq::write_json_file(c.theta_out, j);
  }
  write_manifest(manifest, "train-disc",
                 {{"pairs", c.pairs}, {"noise", rhq::to_json(noise)}, {"train", rhq::to_json(opts)}},
                 start);
  return 0;
}

// ---------------------------------------------------------- reconstruct

struct ReconstructCmd {
  std::string ref, ansatz;
  std::size_t steps = 500;
  double lr = 0.1;
  std::size_t batch = 4;
  std::optional<std::uint64_t> seed;
  bool full_budget = false;
  std::string log;
  CheckFlags flags;
};

int run_reconstruct(const ReconstructCmd& c, const std::string& manifest) {
  const auto start = Clock::now();
  const auto ref = rhq::cli::load_circuit(c.ref);
  const auto ans = rhq::cli::load_circuit(c.ansatz);
  print_warnings(ref);
  print_warnings(ans);
  const std::uint64_t seed = c.seed.value_or(rhq::cli::default_seed());
  const auto cfg = make_check_config(c.flags, ref.circuit.num_qubits(), seed);

  rhq::TrainOptions opts;
  opts.steps = c.steps;
  opts.learning_rate = c.lr;
  opts.batch = c.batch;
  opts.seed = seed;
  if (c.full_budget) opts.stop_threshold = 0.0;
  const auto [params, log] = rhq::train_generator(ref.circuit, ans.circuit,
                                                  cfg.discriminator_params, cfg.noise, opts);
  print_train_summary(log);
  for (const auto& [name, value] : params)
    std::cout << "param " << name << ": " << rhq::format_double(value) << "\n";
  write_log(c.log, log);

  // Final check of the learned parameters on fresh states.
  const auto report = rhq::check_equivalence(ref.circuit, ans.circuit.bound(params), cfg);
  const int code = finish_check(report, cfg, c.flags.json_out);
  write_manifest(manifest, "reconstruct",
                 {{"reference", c.ref}, {"ansatz", c.ansatz}, {"train", rhq::to_json(opts)},
                  {"check", rhq::to_json(cfg)}},
                 start);
  return code;
}

// ---------------------------------------------------------------- sweep

struct SweepCmd {
  std::string pair;
  std::string grid = "0:2pi:17";
  std::size_t states = 100;
  std::size_t betas = 10;
  std::optional<std::uint64_t> seed;
  std::string csv;
};

int run_sweep(const SweepCmd& c, const std::string& manifest) {
  const auto start = Clock::now();
  rhq::Circuit ref(1), gen(1);
  rhq::CheckConfig cfg;
  cfg.num_states = c.states;
  cfg.seed = c.seed.value_or(rhq::cli::default_seed());
  if (c.pair == "flipper") {
    ref = rhq::builtin::flipper_a();
    gen = rhq::builtin::flipper_b();
  } else if (c.pair == "cry") {
    ref = rhq::builtin::cry_d();
    gen = rhq::builtin::cry_e();
    if (c.betas == 0) throw rhq::ParameterError("--betas must be >= 1");
    cfg.free_param_sampling = rhq::FreeParamSampling{{rhq::kBeta}};
    cfg.param_samples = c.betas;
  } else {
    throw rhq::ParameterError("unknown sweep pair '" + c.pair + "' (expected flipper or cry)");
  }
  const auto grid = rhq::cli::parse_delta_grid(c.grid);
  const auto points = rhq::delta_sweep(ref, gen, grid, cfg);
  const std::string csv = rhq::sweep_csv(points);
  if (c.csv.empty())
    std::cout << csv;
  else
    rhq::write_text_file(c.csv, csv);
  write_manifest(manifest, "sweep",
                 {{"pair", c.pair}, {"delta_grid", grid}, {"check", rhq::to_json(cfg)}}, start);
  return 0;
}

// ---------------------------------------------------------------- bench

struct BenchCmd {
  std::string dir;
  std::size_t states = 100;
  std::optional<std::uint64_t> seed;
  double angle = 1.23;
  std::string csv;
};

int run_bench(const BenchCmd& c, const std::string& manifest) {
  const auto start = Clock::now();
  if (!fs::is_directory(c.dir)) throw rhq::Error("'" + c.dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(c.dir))
    if (e.path().extension() == ".qasm") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw rhq::Error("no .qasm files in '" + c.dir + "'");

  rhq::CheckConfig cfg;
  cfg.num_states = c.states;
  cfg.seed = c.seed.value_or(rhq::cli::default_seed());
  const rhq::RandomPosition pos{cfg.seed};

  std::string out = rhq::kBenchCsvHeader;
  std::size_t rows = 0;
  for (const auto& f : files) {
    try {
      const auto t0 = Clock::now();
      const auto prog = rhq::parse_qasm_file(f.string());
      const auto& u = prog.circuit;
      const auto yes = rhq::insert_perturbation(u, rhq::PerturbationSpec::identity(pos));
      const auto no = rhq::insert_perturbation(
          u, rhq::PerturbationSpec::gate(rhq::GateKind::Rx, c.angle, pos));
      const auto ry = rhq::check_equivalence(u, yes, cfg);
      const auto rn = rhq::check_equivalence(u, no, cfg);
      const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
      out += rhq::bench_csv_row({f.stem().string(), u.num_qubits(), u.size(), u.depth(),
                                 ry.mean_p_failure, rn.mean_p_failure, secs});
      ++rows;
    } catch (const rhq::Error& e) {
      std::cerr << "warning: skipping " << f.string() << ": " << e.what() << "\n";
    }
  }
  if (rows == 0) throw rhq::Error("no file in '" + c.dir + "' could be benchmarked");
  if (c.csv.empty())
    std::cout << out;
  else
    rhq::write_text_file(c.csv, out);
  write_manifest(manifest, "bench",
                 {{"dir", c.dir}, {"angle", c.angle}, {"check", rhq::to_json(cfg)}}, start);
  return 0;
}

// -------------------------------------------------------------- perturb

struct PerturbCmd {
  std::string in;
  std::string insert = "rx:1.23";
  std::string position;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int run_perturb(const PerturbCmd& c, const std::string& manifest) {
  const auto start = Clock::now();
  const auto src = rhq::cli::load_circuit(c.in);
  print_warnings(src);
  auto spec = rhq::cli::parse_insert(c.insert);
  spec.position = c.position.empty()
                      ? rhq::RandomPosition{c.seed.value_or(rhq::cli::default_seed())}
                      : rhq::cli::parse_position(c.position);
  const auto where = rhq::resolve_position(src.circuit, spec);
  const auto text = rhq::to_qasm(rhq::insert_perturbation(src.circuit, spec));
  std::cerr << "inserted " << c.insert << " at index " << where.index << " on qubit "
            << where.qubit << "\n";
  if (c.out.empty())
    std::cout << text;
  else
    rhq::write_text_file(c.out, text);
  write_manifest(manifest, "perturb",
                 {{"input", c.in}, {"insert", c.insert}, {"index", where.index},
                  {"qubit", where.qubit}},
                 start);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum circuit equivalence checking with a destructive SWAP test"};
  app.set_version_flag("--version", std::string(rhq::kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  std::string manifest;
  app.add_option("--manifest", manifest, "Write a RunManifest JSON here");

  std::function<int()> action;

  CheckCmd check;
  auto* c = app.add_subcommand("check", "Check two circuits for equivalence");
  c->add_option("reference", check.ref, "QASM file or builtin:NAME")->required();
  c->add_option("generator", check.gen, "QASM file or builtin:NAME")->required();
  c->add_option("--seed", check.seed, "Seed (default: RHQ_SEED or 0)");
  add_check_flags(c, check.flags);
  c->callback([&] { action = [&] { return run_check(check, manifest); }; });

  TrainDiscCmd disc;
  auto* d = app.add_subcommand("train-disc", "Train discriminator angles against CZ noise");
  d->add_option("--pairs", disc.pairs, "Qubit pairs (qubits per compared circuit)")
      ->capture_default_str();
  add_noise_flags(d, disc.noise, "Standard deviation of the CZ noise angles (default 0.02)");
  d->add_option("--steps", disc.steps, "Step budget")->capture_default_str();
  d->add_option("--lr", disc.lr, "Adam learning rate")->capture_default_str();
  d->add_option("--seed", disc.seed, "Seed (default: RHQ_SEED or 0)");
  d->add_flag("--full-budget", disc.full_budget, "Run every step instead of stopping early");
  d->add_option("--log", disc.log, "Training log (.json for JSON, otherwise CSV)");
  d->add_option("--theta-out", disc.theta_out, "Write final thetas and the noise model here");
  d->callback([&] { action = [&] { return run_train_disc(disc, manifest); }; });

  ReconstructCmd rec;
  auto* r = app.add_subcommand("reconstruct", "Train an ansatz to reproduce a reference circuit");
  r->add_option("reference", rec.ref, "QASM file or builtin:NAME")->required();
  r->add_option("ansatz", rec.ansatz, "Parameterized ansatz (builtin:NAME or QASM)")->required();
  r->add_option("--steps", rec.steps, "Step budget")->capture_default_str();
  r->add_option("--lr", rec.lr, "Adam learning rate")->capture_default_str();
  r->add_option("--batch", rec.batch, "Random states per step")->capture_default_str();
  r->add_option("--seed", rec.seed, "Seed (default: RHQ_SEED or 0)");
  r->add_flag("--full-budget", rec.full_budget, "Run every step instead of stopping early");
  r->add_option("--log", rec.log, "Training log (.json for JSON, otherwise CSV)");
  add_check_flags(r, rec.flags);
  r->callback([&] { action = [&] { return run_reconstruct(rec, manifest); }; });

  SweepCmd sweep;
  auto* s = app.add_subcommand("sweep", "Mean p_failure over a grid of the distortion delta");
  s->add_option("pair", sweep.pair, "flipper or cry")->required();
  s->add_option("--delta-grid", sweep.grid, "a:b:count, pi allowed")->capture_default_str();
  s->add_option("--states", sweep.states, "States per grid point")->capture_default_str();
  s->add_option("--betas", sweep.betas, "Random beta values per state (cry only)")
      ->capture_default_str();
  s->add_option("--seed", sweep.seed, "Seed (default: RHQ_SEED or 0)");
  s->add_option("--csv", sweep.csv, "Write the CSV here instead of stdout");
  s->callback([&] { action = [&] { return run_sweep(sweep, manifest); }; });

  BenchCmd bench;
  auto* b = app.add_subcommand("bench", "Identity vs Rx insertion benchmark over a QASM directory");
  b->add_option("dir", bench.dir, "Directory of .qasm files")->required();
  b->add_option("--states", bench.states, "States per check")->capture_default_str();
  b->add_option("--seed", bench.seed, "Seed for states and positions (default: RHQ_SEED or 0)");
  b->add_option("--angle", bench.angle, "Rx angle of the non-equivalent variant")
      ->capture_default_str();
  b->add_option("--csv", bench.csv, "Write the CSV here instead of stdout");
  b->callback([&] { action = [&] { return run_bench(bench, manifest); }; });

  PerturbCmd pert;
  auto* p = app.add_subcommand("perturb", "Insert one gate into a circuit and emit QASM");
  p->add_option("input", pert.in, "QASM file or builtin:NAME")->required();
  p->add_option("--insert", pert.insert, "id, a fixed gate (x, h, ...) or rx/ry/rz/u1:ANGLE")
      ->capture_default_str();
  p->add_option("--position", pert.position, "random:SEED or INDEX:QUBIT (default random:--seed)");
  p->add_option("--seed", pert.seed, "Seed of the default random position");
  p->add_option("--out", pert.out, "Write QASM here instead of stdout");
  p->callback([&] { action = [&] { return run_perturb(pert, manifest); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return rhq::cli::kExitError;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return rhq::cli::kExitError;
  }
}
