// Copyright 2026 The spin3n Authors
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

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spin3n/circuit_io.hpp"
#include "spin3n/oracle.hpp"
#include "spin3n/simulator.hpp"

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

spin3n::MeasureSelection parse_measure(const std::string& value) {
  if (value == "all") return spin3n::MeasureSelection::all();
  if (value == "even") return spin3n::MeasureSelection::even();
  if (value == "odd") return spin3n::MeasureSelection::odd();
  try {
    std::size_t used = 0;
    const int qubit = std::stoi(value, &used);
    if (used == value.size() && qubit >= 1) {
      return spin3n::MeasureSelection::single(qubit);
    }
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(
      "--measure expects all, even, odd, or a 1-based qubit index");
}

void emit(const json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + out_path);
  }
  out << doc.dump(2) << "\n";
}

json rotation_diagnostics(const spin3n::RotationMatrix& r) {
  return {{"dim", r.rows()},
          {"orthogonality_residual", spin3n::orthogonality_residual(r)},
          {"determinant", r.determinant()}};
}

int cmd_simulate(const std::string& path, const std::string& mode,
                 const std::string& measure, const std::string& out_path) {
  const spin3n::Circuit circuit = spin3n::load_circuit(path);
  const spin3n::MeasureSelection selection = parse_measure(measure);
  json doc;
  doc["command"] = "simulate";
  doc["mode"] = mode;
  doc["lines"] = circuit.lines;

  if (mode == "dense") {
    if (circuit.lines > spin3n::kOracleMaxLines) {
      throw std::invalid_argument("dense mode supports at most 5 lines");
    }
    const auto start = Clock::now();
    spin3n::MeasurementReport report = spin3n::run_dense(circuit);
    doc["timing"] = {{"run_seconds", seconds_since(start)}};
    if (selection.which == spin3n::MeasureSelection::Which::kSingle &&
        !report.qubits.contains(selection.qubit)) {
      throw std::invalid_argument("qubit index out of range");
    }
    spin3n::MeasurementReport selected;
    for (const auto& [qubit, stats] : report.qubits) {
      const bool keep =
          selection.which == spin3n::MeasureSelection::Which::kAll ||
          (selection.which == spin3n::MeasureSelection::Which::kEven &&
           qubit % 2 == 0) ||
          (selection.which == spin3n::MeasureSelection::Which::kOdd &&
           qubit % 2 == 1) ||
          (selection.which == spin3n::MeasureSelection::Which::kSingle &&
           qubit == selection.qubit);
      if (keep) selected.qubits[qubit] = stats;
    }
    doc["qubits"] = spin3n::report_qubits_to_json(selected);
    emit(doc, out_path);
    return 0;
  }
  if (mode != "rotation") {
    throw std::invalid_argument("--mode expects rotation or dense");
  }

  const auto compile_start = Clock::now();
  const spin3n::RotationMatrix r = spin3n::compile(circuit);
  const double compile_seconds = seconds_since(compile_start);
  const auto measure_start = Clock::now();
  const spin3n::MeasurementReport report =
      spin3n::measure_selected(circuit, r, selection);
  doc["qubits"] = spin3n::report_qubits_to_json(report);
  doc["rotation"] = rotation_diagnostics(r);
  doc["timing"] = {{"compile_seconds", compile_seconds},
                   {"measure_seconds", seconds_since(measure_start)}};
  emit(doc, out_path);
  return 0;
}

int cmd_verify(const std::string& path, double tol,
               const std::string& out_path) {
  const spin3n::Circuit circuit = spin3n::load_circuit(path);
  if (circuit.lines > spin3n::kOracleMaxLines) {
    throw std::invalid_argument("verify supports at most 5 lines");
  }
  const auto start = Clock::now();
  const spin3n::RotationMatrix r = spin3n::compile(circuit);
  const spin3n::MeasurementReport fast = spin3n::measure_selected(circuit, r);
  const spin3n::MeasurementReport dense = spin3n::run_dense(circuit);
  double max_discrepancy = 0.0;
  for (const auto& [qubit, stats] : fast.qubits) {
    const auto& reference = dense.qubits.at(qubit);
    max_discrepancy = std::max(max_discrepancy,
                               std::abs(stats.p0 - reference.p0));
  }
  const bool pass = max_discrepancy <= tol;

  json doc;
  doc["command"] = "verify";
  doc["lines"] = circuit.lines;
  doc["qubits"] = spin3n::report_qubits_to_json(fast);
  doc["dense_qubits"] = spin3n::report_qubits_to_json(dense);
  doc["rotation"] = rotation_diagnostics(r);
  doc["max_discrepancy"] = max_discrepancy;
  doc["tolerance"] = tol;
  doc["pass"] = pass;
  doc["timing"] = {{"total_seconds", seconds_since(start)}};
  emit(doc, out_path);
  return pass ? 0 : 1;
}

int cmd_convert(const std::string& path, const std::string& out_path) {
  const spin3n::ComplexMatrix u = spin3n::load_gate_matrix(path);
  if (spin3n::unitarity_residual(u) >= spin3n::kTolExact) {
    throw std::invalid_argument("gate matrix is not unitary");
  }
  const auto normalized = spin3n::phase_normalize_su4(u);
  const spin3n::SpinElement s = spin3n::su4_to_spin6(u);
  const spin3n::RotationMatrix r = spin3n::spin6_to_so6(s);

  // All 32 even blades of Cl+(6) in (grade, mask) order.
  std::vector<std::uint64_t> masks;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    if (std::popcount(mask) % 2 == 0) masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::make_pair(std::popcount(a), a) <
           std::make_pair(std::popcount(b), b);
  });
  json coefficients = json::array();
  for (std::uint64_t mask : masks) {
    std::string blade = "1";
    if (mask != 0) {
      blade.clear();
      for (int g = 1; g <= 6; ++g) {
        if ((mask >> (g - 1)) & 1) blade += "e" + std::to_string(g);
      }
    }
    coefficients.push_back({{"blade", blade},
                            {"grade", std::popcount(mask)},
                            {"value", s.element().coefficient(mask)}});
  }

  json rotation = json::array();
  for (int i = 0; i < 6; ++i) {
    json row = json::array();
    for (int j = 0; j < 6; ++j) row.push_back(r(i, j));
    rotation.push_back(std::move(row));
  }

  json doc;
  doc["command"] = "convert";
  doc["phase"] = spin3n::complex_to_json(normalized.phase);
  doc["coefficients"] = std::move(coefficients);
  doc["rotation"] = std::move(rotation);
  emit(doc, out_path);
  return 0;
}

int cmd_lie_dim(int n, const std::string& out_path) {
  if (n < 1 || n > 6) {
    throw std::invalid_argument("lie-dim supports n in 1..6");
  }
  const auto sig = spin3n::euclidean_signature(3 * n);
  std::vector<spin3n::CliffordElement> bivectors;
  for (int l = 1; l <= n; ++l) {
    const int base = 3 * (l - 1);
    for (int j = 1; j <= 3; ++j) {
      for (int k = j + 1; k <= 3; ++k) {
        bivectors.push_back(
            spin3n::CliffordElement::generator(sig, base + j) *
            spin3n::CliffordElement::generator(sig, base + k));
      }
    }
  }
  for (int l = 1; l <= n; ++l) {
    for (int m = l + 1; m <= n; ++m) {
      for (int j = 1; j <= 3; ++j) {
        for (int k = 1; k <= 3; ++k) {
          bivectors.push_back(
              spin3n::CliffordElement::generator(sig, 3 * (l - 1) + j) *
              spin3n::CliffordElement::generator(sig, 3 * (m - 1) + k));
        }
      }
    }
  }
  json doc;
  doc["command"] = "lie-dim";
  doc["n"] = n;
  doc["spin_closure_dim"] = spin3n::lie_closure_dimension(bivectors);
  doc["spin_dim_formula"] = 3 * n * (3 * n - 1) / 2;
  if (n <= 3) {
    doc["su_closure_dim"] = spin3n::su_closure_dim(n);
    doc["su_dim_formula"] = (1 << (2 * n)) - 1;
  }
  emit(doc, out_path);
  return 0;
}

int cmd_bench(int n, int gates, std::uint64_t seed, const std::string& measure,
              const std::string& out_path) {
  if (n < 1 || gates < 0) {
    throw std::invalid_argument("bench needs positive --lines and --gates");
  }
  std::mt19937_64 rng(seed);
  const spin3n::Circuit circuit = spin3n::random_circuit(n, gates, rng);
  const auto compile_start = Clock::now();
  const spin3n::RotationMatrix r = spin3n::compile(circuit);
  const double compile_seconds = seconds_since(compile_start);
  const auto measure_start = Clock::now();
  const spin3n::MeasurementReport report =
      spin3n::measure_selected(circuit, r, parse_measure(measure));
  const double measure_seconds = seconds_since(measure_start);

  json doc;
  doc["command"] = "bench";
  doc["lines"] = n;
  doc["gates"] = gates;
  doc["seed"] = seed;
  doc["measured_qubits"] = report.qubits.size();
  doc["rotation"] = rotation_diagnostics(r);
  doc["timing"] = {{"compile_seconds", compile_seconds},
                   {"measure_seconds", measure_seconds}};
  emit(doc, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial-time simulator for Spin(3n) quantum circuits"};
  app.require_subcommand(1);

  std::string circuit_path;
  std::string gate_path;
  std::string mode = "rotation";
  std::string measure = "all";
  std::string out_path;
  double tol = spin3n::kTolCompose;
  int lie_n = 1;
  int bench_lines = 200;
  int bench_gates = 2000;
  std::uint64_t seed = 1;

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Run a circuit and report single-qubit statistics");
  simulate->add_option("circuit", circuit_path, "circuit JSON file")
      ->required();
  simulate->add_option("--mode", mode, "rotation or dense engine");
  simulate->add_option("--measure", measure, "all, even, odd, or qubit index");
  simulate->add_option("--out", out_path, "write the report to a file");

  CLI::App* verify = app.add_subcommand(
      "verify", "Run both engines and compare per-qubit statistics");
  verify->add_option("circuit", circuit_path, "circuit JSON file")->required();
  verify->add_option("--tol", tol, "maximum allowed per-qubit discrepancy");
  verify->add_option("--out", out_path, "write the report to a file");

  CLI::App* convert = app.add_subcommand(
      "convert", "Print the even Cl+(6) element and rotation of a 4x4 gate");
  convert->add_option("gate", gate_path, "gate matrix JSON file")->required();
  convert->add_option("--out", out_path, "write the report to a file");

  CLI::App* lie_dim = app.add_subcommand(
      "lie-dim", "Report gate-algebra closure dimensions for n lines");
  lie_dim->add_option("n", lie_n, "line count (1..6)")->required();
  lie_dim->add_option("--out", out_path, "write the report to a file");

  CLI::App* bench = app.add_subcommand(
      "bench", "Time compile and measurement on a seeded random circuit");
  bench->add_option("--lines", bench_lines, "line count");
  bench->add_option("--gates", bench_gates, "gate count");
  bench->add_option("--seed", seed, "random generator seed");
  bench->add_option("--measure", measure, "all, even, odd, or qubit index");
  bench->add_option("--out", out_path, "write the report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) {
      return cmd_simulate(circuit_path, mode, measure, out_path);
    }
    if (verify->parsed()) {
      return cmd_verify(circuit_path, tol, out_path);
    }
    if (convert->parsed()) {
      return cmd_convert(gate_path, out_path);
    }
    if (lie_dim->parsed()) {
      return cmd_lie_dim(lie_n, out_path);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_lines, bench_gates, seed, measure, out_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
