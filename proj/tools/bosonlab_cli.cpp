// Copyright 2026 Bosonlab Contributors
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

// Command-line harness over the bosonlab C API: state dumps, entropy sweeps,
// Wigner grids, and verification suites, all emitting reproducible CSV/JSON
// artifacts with a run manifest.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bosonlab.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitTruncation = 3;
constexpr int kExitVerify = 4;

class cli_error : public std::runtime_error {
 public:
  cli_error(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code(exit_code) {}
  int exit_code;
};

[[noreturn]] void fail_status(bl_status st, const std::string& context) {
  const int code = st == BL_ERR_TRUNCATION ? kExitTruncation : kExitValidation;
  throw cli_error(code, context + ": " + bl_last_error());
}

struct StateHandle {
  bl_state* ptr = nullptr;
  ~StateHandle() { bl_state_free(ptr); }
  StateHandle() = default;
  StateHandle(const StateHandle&) = delete;
  StateHandle& operator=(const StateHandle&) = delete;
};

struct TwoModeHandle {
  bl_twomode* ptr = nullptr;
  ~TwoModeHandle() { bl_twomode_free(ptr); }
  TwoModeHandle() = default;
  TwoModeHandle(const TwoModeHandle&) = delete;
  TwoModeHandle& operator=(const TwoModeHandle&) = delete;
};

void make_state(const json& spec, StateHandle& out) {
  const std::string text = spec.dump();
  if (bl_status st = bl_state_from_json(text.c_str(), &out.ptr); st != BL_OK) {
    fail_status(st, "state " + text);
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fnv1a_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cli_error(kExitValidation, "cannot open config file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw cli_error(kExitValidation, std::string("config parse error: ") + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cli_error(kExitValidation, "cannot write " + path.string());
  out << text;
}

struct ManifestWriter {
  std::string command;
  std::string config_hash;
  std::filesystem::path out_dir;
  std::vector<std::string> outputs;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  ManifestWriter(std::string cmd, const json& config, const std::string& out)
      : command(std::move(cmd)), config_hash(fnv1a_hash(config.dump())), out_dir(out) {
    std::filesystem::create_directories(out_dir);
  }

  void add(const std::string& name) { outputs.push_back(name); }

  void finish() {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    json m;
    m["command"] = command;
    m["config_hash"] = config_hash;
    m["versions"] = "bosonlab 0.1.0";
    m["outputs"] = outputs;
    m["wall_time_ms"] = ms;
    write_text(out_dir / "manifest.json", m.dump(2) + "\n");
  }
};

// ---------------------------------------------------------------- state ----

int cmd_state(const std::string& config_path, const std::string& out_dir, int cutoff_override) {
  json config = load_config(config_path);
  if (cutoff_override >= 0) config["cutoff"] = cutoff_override;
  ManifestWriter manifest("state", config, out_dir);

  StateHandle state;
  make_state(config, state);

  const int dim = bl_state_dim(state.ptr);
  std::vector<double> amps(static_cast<std::size_t>(2 * dim));
  bl_state_amplitudes(state.ptr, amps.data());

  std::ostringstream csv;
  csv << "n,re,im,prob\n";
  for (int n = 0; n < dim; ++n) {
    const double re = amps[static_cast<std::size_t>(2 * n)];
    const double im = amps[static_cast<std::size_t>(2 * n + 1)];
    csv << n << "," << fmt(re) << "," << fmt(im) << "," << fmt(re * re + im * im) << "\n";
  }
  write_text(std::filesystem::path(out_dir) / "amplitudes.csv", csv.str());
  manifest.add("amplitudes.csv");
  manifest.finish();
  return kExitOk;
}

// ---------------------------------------------------------------- sweep ----

double get_device_psi(const json& device) { return device.value("psi", 0.0); }

double get_state_phi(const json& state) { return state.value("phi", 0.0); }

// One evaluation: exact linear entropy of the evolved product plus the
// second-order prediction.
struct SweepPoint {
  double exact = 0.0;
  double predicted = 0.0;
  double ratio = 0.0;
};

SweepPoint evaluate_point(const json& device, const json& state_a, const json& state_b) {
  StateHandle a, b;
  make_state(state_a, a);
  make_state(state_b, b);

  TwoModeHandle joint;
  if (bl_status st = bl_tensor(a.ptr, b.ptr, &joint.ptr); st != BL_OK) fail_status(st, "tensor");

  const std::string device_text = device.dump();
  TwoModeHandle evolved;
  double leak = 0.0;
  if (bl_status st = bl_evolve(joint.ptr, device_text.c_str(), &evolved.ptr, &leak);
      st != BL_OK) {
    fail_status(st, "evolve " + device_text);
  }

  SweepPoint pt;
  if (bl_status st = bl_linear_entropy(evolved.ptr, &pt.exact); st != BL_OK) {
    fail_status(st, "linear entropy");
  }
  if (bl_status st = bl_predict_entropy(a.ptr, b.ptr, device_text.c_str(), &pt.predicted);
      st != BL_OK) {
    fail_status(st, "predicted entropy");
  }
  double strength = 0.0;
  if (device.contains("theta")) strength = device["theta"].get<double>();
  if (device.contains("r")) strength = device["r"].get<double>();
  pt.ratio = strength != 0.0 ? pt.exact / (strength * strength) : 0.0;
  return pt;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir) {
  const json config = load_config(config_path);
  ManifestWriter manifest("sweep", config, out_dir);

  for (const char* key : {"device", "state_a", "state_b", "sweep"}) {
    if (!config.contains(key)) {
      throw cli_error(kExitValidation, std::string("sweep config missing \"") + key + "\"");
    }
  }
  const json& sweep = config["sweep"];
  const std::string parameter = sweep.at("parameter").get<std::string>();
  const double from = sweep.at("from").get<double>();
  const double to = sweep.at("to").get<double>();
  const int points = sweep.at("points").get<int>();
  if (points < 1) throw cli_error(kExitValidation, "sweep: points must be >= 1");

  std::ostringstream csv;
  csv << parameter << ",exact,predicted,ratio_exact_over_strength_sq\n";
  for (int i = 0; i < points; ++i) {
    const double value = points == 1 ? from : from + (to - from) * i / (points - 1);
    json device = config["device"];
    json state_a = config["state_a"];
    json state_b = config["state_b"];
    if (parameter == "delta_phi") {
      // delta_phi = phi_b - phi_a - 2 psi; applied by overriding phi_b.
      if (state_b.value("type", "") != "squeezed_vacuum") {
        throw cli_error(kExitValidation, "delta_phi sweep requires a squeezed_vacuum state_b");
      }
      state_b["phi"] = get_state_phi(state_a) + 2.0 * get_device_psi(device) + value;
    } else if (parameter == "psi") {
      device["psi"] = value;
    } else if (parameter == "strength") {
      if (device.contains("theta")) {
        device["theta"] = value;
      } else {
        device["r"] = value;
      }
    } else {
      throw cli_error(kExitValidation, "unknown sweep parameter: " + parameter);
    }
    try {
      const SweepPoint pt = evaluate_point(device, state_a, state_b);
      csv << fmt(value) << "," << fmt(pt.exact) << "," << fmt(pt.predicted) << ","
          << fmt(pt.ratio) << "\n";
    } catch (const cli_error& e) {
      if (e.exit_code == kExitTruncation) {
        throw cli_error(kExitTruncation, "truncation budget exceeded at " + parameter + " = " +
                                             fmt(value) + ": " + e.what());
      }
      throw;
    }
  }
  write_text(std::filesystem::path(out_dir) / "sweep.csv", csv.str());
  manifest.add("sweep.csv");
  manifest.finish();
  return kExitOk;
}

// --------------------------------------------------------------- wigner ----

int cmd_wigner(const std::string& config_path, const std::string& out_dir, int threads) {
  const json config = load_config(config_path);
  ManifestWriter manifest("wigner", config, out_dir);

  if (!config.contains("state")) throw cli_error(kExitValidation, "wigner config missing state");
  StateHandle state;
  make_state(config["state"], state);

  double x_min, x_max, p_min, p_max;
  int nx = 201, np = 201;
  if (config.contains("grid")) {
    const json& g = config["grid"];
    x_min = g.at("x_min").get<double>();
    x_max = g.at("x_max").get<double>();
    p_min = g.at("p_min").get<double>();
    p_max = g.at("p_max").get<double>();
    nx = g.value("nx", nx);
    np = g.value("np", np);
  } else {
    double extent = 0.0;
    if (config.contains("extent")) {
      extent = config["extent"].get<double>();
    } else {
      double mean_n = 0.0;
      bl_state_mean_photon(state.ptr, &mean_n);
      extent = std::sqrt(2.0 * mean_n) + 4.0;
    }
    x_min = p_min = -extent;
    x_max = p_max = extent;
  }
  if (nx < 1 || np < 1) throw cli_error(kExitValidation, "wigner: grid sizes must be >= 1");

  std::vector<double> values(static_cast<std::size_t>(nx) * static_cast<std::size_t>(np));
  int warning = 0;
  if (bl_status st = bl_wigner(state.ptr, x_min, x_max, nx, p_min, p_max, np, threads,
                               values.data(), &warning);
      st != BL_OK) {
    fail_status(st, "wigner grid");
  }
  if (warning != 0) {
    std::cerr << "warning: grid may be too small for the state's support\n";
  }

  std::ostringstream csv;
  csv << "x,p,W\n";
  for (int ix = 0; ix < nx; ++ix) {
    const double x = nx == 1 ? x_min : x_min + (x_max - x_min) * ix / (nx - 1);
    for (int ip = 0; ip < np; ++ip) {
      const double p = np == 1 ? p_min : p_min + (p_max - p_min) * ip / (np - 1);
      csv << fmt(x) << "," << fmt(p) << ","
          << fmt(values[static_cast<std::size_t>(ix) * np + ip]) << "\n";
    }
  }
  write_text(std::filesystem::path(out_dir) / "wigner.csv", csv.str());
  manifest.add("wigner.csv");

  {
    std::ofstream bin(std::filesystem::path(out_dir) / "wigner.bin", std::ios::binary);
    const std::int32_t header[3] = {static_cast<std::int32_t>(nx), static_cast<std::int32_t>(np),
                                    1};
    bin.write(reinterpret_cast<const char*>(header), sizeof header);
    bin.write(reinterpret_cast<const char*>(values.data()),
              static_cast<std::streamsize>(values.size() * sizeof(double)));
  }
  manifest.add("wigner.bin");
  manifest.finish();
  return kExitOk;
}

// --------------------------------------------------------------- verify ----

struct VerifyReport {
  json checks = json::array();
  bool all_passed = true;

  void record(const std::string& name, bool pass, double value, double tolerance) {
    checks.push_back({{"name", name}, {"pass", pass}, {"value", value}, {"tolerance", tolerance}});
    all_passed = all_passed && pass;
  }
};

void make_random_state(std::mt19937& rng, int cutoff, int support, StateHandle& out) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> re_im(static_cast<std::size_t>(2 * (cutoff + 1)), 0.0);
  for (int n = 0; n <= support && n <= cutoff; ++n) {
    re_im[static_cast<std::size_t>(2 * n)] = gauss(rng);
    re_im[static_cast<std::size_t>(2 * n + 1)] = gauss(rng);
  }
  if (bl_status st = bl_state_from_amplitudes(re_im.data(), cutoff + 1, &out.ptr); st != BL_OK) {
    fail_status(st, "random state");
  }
}

void verify_perturbative(VerifyReport& report, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 2.0 * 3.14159265358979323846);

  // Coherent pair stays separable at a mode mixer.
  {
    const json a = {{"type", "coherent"}, {"alpha", {1.1, 0.0}}, {"cutoff", 30}};
    const json b = {{"type", "coherent"}, {"alpha", {0.4, 0.5}}, {"cutoff", 30}};
    const json dev = {
        {"type", "beam_splitter"}, {"theta", 0.3}, {"phi", uni(rng)}, {"psi", uni(rng)}};
    const SweepPoint pt = evaluate_point(dev, a, b);
    report.record("coherent_pair_null", pt.exact < 1e-9, pt.exact, 1e-9);
  }
  // Matched squeezed pair stays separable.
  {
    const double psi = uni(rng), phi_a = uni(rng);
    const json a = {{"type", "squeezed_vacuum"}, {"r", 0.5}, {"phi", phi_a}, {"cutoff", 40}};
    const json b = {
        {"type", "squeezed_vacuum"}, {"r", 0.5}, {"phi", phi_a + 2.0 * psi}, {"cutoff", 40}};
    const json dev = {{"type", "beam_splitter"}, {"theta", 0.02}, {"phi", 0.0}, {"psi", psi}};
    const SweepPoint pt = evaluate_point(dev, a, b);
    report.record("matched_squeezed_null_exact", pt.exact < 1e-8, pt.exact, 1e-8);
    report.record("matched_squeezed_null_predicted", std::abs(pt.predicted) < 1e-12, pt.predicted,
                  1e-12);
  }
  // Pair-source entropy floor on coherent inputs: 2H/r^2 = 1.
  {
    const json a = {{"type", "coherent"}, {"alpha", {0.8, 0.2}}, {"cutoff", 30}};
    const json b = {{"type", "coherent"}, {"alpha", {0.5, -0.4}}, {"cutoff", 30}};
    const json dev = {{"type", "two_mode_squeezer"}, {"r", 0.01}, {"psi", uni(rng)}};
    const SweepPoint pt = evaluate_point(dev, a, b);
    const double scaled = 2.0 * pt.exact / (0.01 * 0.01);
    report.record("pair_source_floor", std::abs(scaled - 1.0) < 0.01, scaled, 0.01);
  }
  // Second-order error shrinks by >= 2x when theta is halved.
  for (int trial = 0; trial < 3; ++trial) {
    StateHandle a, b;
    make_random_state(rng, 20, 5, a);
    make_random_state(rng, 20, 5, b);
    const double psi = uni(rng);
    double err[2];
    const double thetas[2] = {0.02, 0.01};
    for (int i = 0; i < 2; ++i) {
      const json dev = {
          {"type", "beam_splitter"}, {"theta", thetas[i]}, {"phi", 0.0}, {"psi", psi}};
      TwoModeHandle joint;
      bl_tensor(a.ptr, b.ptr, &joint.ptr);
      TwoModeHandle evolved;
      double leak = 0.0;
      const std::string dev_text = dev.dump();
      if (bl_status st = bl_evolve(joint.ptr, dev_text.c_str(), &evolved.ptr, &leak);
          st != BL_OK) {
        fail_status(st, "evolve");
      }
      double exact = 0.0, predicted = 0.0;
      bl_linear_entropy(evolved.ptr, &exact);
      bl_predict_entropy(a.ptr, b.ptr, dev_text.c_str(), &predicted);
      err[i] = std::abs(exact - predicted);
    }
    const double ratio = err[1] > 0.0 ? err[0] / err[1] : 1e9;
    report.record("perturbative_error_halving_" + std::to_string(trial), ratio >= 2.0, ratio, 2.0);
  }
}

void verify_inequalities(VerifyReport& report, unsigned seed) {
  std::mt19937 rng(seed);
  // Both inequality kinds hold on random states.
  const std::pair<int, int> kl_pairs[] = {{1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 1}};
  for (const auto& [k, l] : kl_pairs) {
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      StateHandle s;
      make_random_state(rng, 16, 10, s);
      double rep[5];
      if (bl_status st = bl_check_squeeze_inequality(s.ptr, k, l, rep); st != BL_OK) {
        fail_status(st, "squeeze inequality");
      }
      worst = std::min(worst, rep[2]);
    }
    report.record("squeeze_gap_floor_k" + std::to_string(k) + "_l" + std::to_string(l),
                  worst >= -1e-9, worst, -1e-9);
  }
  // Saturation by the constructed families.
  {
    const json spec = {{"type", "squeezed_vacuum"}, {"r", 1.0}};
    StateHandle s;
    make_state(spec, s);
    double rep[5];
    bl_check_squeeze_inequality(s.ptr, 1, 1, rep);
    report.record("squeezed_vacuum_saturates_1_1", rep[3] < 1e-8, rep[3], 1e-8);
  }
  {
    const json spec = {
        {"type", "higher_cat"}, {"alpha", {2.0, 0.0}}, {"n", 2}, {"relative_phases", {0.0, 0.0}}};
    StateHandle s;
    make_state(spec, s);
    double rep[5];
    bl_check_cat_inequality(s.ptr, 2, rep);
    report.record("two_cat_saturates_n2", rep[3] < 1e-8, rep[3], 1e-8);
  }
  {
    const json spec = {{"type", "generalized_kl"}, {"k", 2}, {"l", 1}, {"eta", {0.5, 0.0}}};
    StateHandle s;
    make_state(spec, s);
    double rep[5];
    bl_check_squeeze_inequality(s.ptr, 2, 1, rep);
    report.record("generalized_2_1_saturates", rep[3] < 1e-8, rep[3], 1e-8);
    double residual = 0.0;
    bl_eigen_residual(s.ptr, 2, 1, 0.5, 0.0, &residual);
    report.record("generalized_2_1_residual", residual < 1e-7, residual, 1e-7);
  }
}

void verify_extremal(VerifyReport& report, unsigned seed) {
  const double theta = 0.01;
  json config = {{"N", 2.0},       {"cutoff", 12},
                 {"restarts", 6},  {"max_iters", 300},
                 {"seed", seed},   {"step_tolerance", 1e-9},
                 {"device", {{"type", "beam_splitter"}, {"theta", theta}, {"phi", 0.0},
                             {"psi", 0.0}}}};
  char* result_text = nullptr;
  if (bl_status st = bl_search(config.dump().c_str(), 1, &result_text); st != BL_OK) {
    fail_status(st, "search");
  }
  const json result = json::parse(result_text);
  bl_string_free(result_text);

  double f_max = 0.0, g_max = 0.0, h_max = 0.0;
  bl_extremal_values(2.0, &f_max, &g_max, &h_max);
  const double best = result["best_value"].get<double>();
  const double bound = h_max * theta * theta;
  report.record("search_within_2pct_of_bound", best >= 0.98 * bound, best / (theta * theta),
                0.98 * h_max);
  report.record("search_never_above_bound", best <= bound + 1e-6 * theta * theta,
                best / (theta * theta), h_max);
  report.record("search_constraint", result["constraint_violation"].get<double>() < 1e-6,
                result["constraint_violation"].get<double>(), 1e-6);
}

int cmd_verify(const std::string& suite, const std::string& out_dir, unsigned seed) {
  VerifyReport report;
  if (suite == "perturbative") {
    verify_perturbative(report, seed);
  } else if (suite == "inequalities") {
    verify_inequalities(report, seed);
  } else if (suite == "extremal") {
    verify_extremal(report, seed);
  } else {
    throw cli_error(kExitValidation, "unknown suite: " + suite);
  }

  json out;
  out["suite"] = suite;
  out["seed"] = seed;
  out["passed"] = report.all_passed;
  out["checks"] = report.checks;
  const std::string text = out.dump(2) + "\n";
  std::cout << text;
  if (!out_dir.empty()) {
    json config = {{"suite", suite}, {"seed", seed}};
    ManifestWriter manifest("verify", config, out_dir);
    write_text(std::filesystem::path(out_dir) / "report.json", text);
    manifest.add("report.json");
    manifest.finish();
  }
  return report.all_passed ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"truncated two-mode Fock-space entanglement workbench"};
  app.require_subcommand(1);

  std::string config_path, out_dir, suite;
  int cutoff_override = -1;
  int threads = 1;
  unsigned seed = 1;

  CLI::App* state = app.add_subcommand("state", "dump a state's Fock amplitudes to CSV");
  state->add_option("--config", config_path, "state spec JSON file")->required();
  state->add_option("--out", out_dir, "output directory")->required();
  state->add_option("--cutoff", cutoff_override, "override the spec cutoff");

  CLI::App* sweep = app.add_subcommand("sweep", "exact vs predicted entropy over a parameter");
  sweep->add_option("--config", config_path, "sweep config JSON file")->required();
  sweep->add_option("--out", out_dir, "output directory")->required();

  CLI::App* wig = app.add_subcommand("wigner", "Wigner function grid (CSV + binary)");
  wig->add_option("--config", config_path, "wigner config JSON file")->required();
  wig->add_option("--out", out_dir, "output directory")->required();
  wig->add_option("--threads", threads, "worker threads for grid rows");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "perturbative | inequalities | extremal")->required();
  verify->add_option("--out", out_dir, "optional output directory for the report");
  verify->add_option("--seed", seed, "RNG seed for randomized checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (state->parsed()) return cmd_state(config_path, out_dir, cutoff_override);
    if (sweep->parsed()) return cmd_sweep(config_path, out_dir);
    if (wig->parsed()) return cmd_wigner(config_path, out_dir, threads);
    if (verify->parsed()) return cmd_verify(suite, out_dir, seed);
  } catch (const cli_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
