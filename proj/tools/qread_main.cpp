// Copyright 2026 The qread Authors
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

// Command-line driver for the quantum-reading experiments. Subcommands:
//   read     error probabilities of the three receivers at one point
//   sweep    one quantity over an alpha/theta/prior0 grid
//   gram     the 4x4 quasi-Bell Gram matrix
//   entropy  entanglement degree of the four quasi-Bell states
//   qfi      quantum Fisher information of the probes
// Exit codes: 0 success, 1 domain/usage error, 2 backend cross-check failure.

#include <exception>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qread/qread.hpp"

namespace {

struct CommonFlags {
  std::string theta = "pi";
  double alpha = 1.0;
  double prior0 = 0.5;
  std::string backend = "analytic";
  std::string format = "csv";
  std::string out;
  double fock_tail_tol = 1e-14;
};

double parse_theta(const std::string& s) {
  if (s == "pi") return std::numbers::pi;
  try {
    std::size_t consumed = 0;
    const double v = std::stod(s, &consumed);
    if (consumed == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw qread::DomainError("--theta expects radians or the literal 'pi', got '" +
                           s + "'");
}

qread::Backend parse_backend(const std::string& s) {
  if (s == "analytic") return qread::Backend::analytic;
  if (s == "fock") return qread::Backend::fock;
  if (s == "both") return qread::Backend::both;
  throw qread::DomainError("--backend must be analytic, fock or both");
}

qread::OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return qread::OutputFormat::csv;
  if (s == "json") return qread::OutputFormat::json;
  throw qread::DomainError("--format must be csv or json");
}

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool with_point) {
  if (with_point) {
    cmd->add_option("--alpha", flags.alpha, "coherent amplitude |alpha|");
    cmd->add_option("--theta", flags.theta,
                    "phase shift in radians, or 'pi'");
    cmd->add_option("--prior0", flags.prior0, "prior probability of bit 0");
  }
  cmd->add_option("--backend", flags.backend, "analytic | fock | both");
  cmd->add_option("--format", flags.format, "csv | json");
  cmd->add_option("--out", flags.out, "output path (default: stdout)");
  cmd->add_option("--fock-tail-tol", flags.fock_tail_tol,
                  "Poisson tail tolerance for Fock truncation");
}

qread::ExperimentOptions experiment_options(const CommonFlags& flags) {
  qread::ExperimentOptions opts;
  opts.backend = parse_backend(flags.backend);
  opts.fock_tail_tol = flags.fock_tail_tol;
  return opts;
}

std::vector<double> alpha_grid(const CommonFlags& flags, bool single_alpha,
                               double start, double stop, int points) {
  if (single_alpha) return {flags.alpha};
  return qread::linspace(start, stop, points);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum reading of a phase-encoded memory: coherent-state "
               "probe vs entangled-coherent (quasi-Bell) probe"};
  app.require_subcommand(1);

  CommonFlags read_flags;
  CLI::App* read_cmd =
      app.add_subcommand("read", "receiver error probabilities at one point");
  add_common_flags(read_cmd, read_flags, true);

  CommonFlags sweep_flags;
  std::string sweep_variable = "theta";
  std::string sweep_quantity = "overlap";
  double sweep_start = 0.0, sweep_stop = 0.0;
  int sweep_points = 0;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "one quantity over a parameter grid");
  sweep_cmd->add_option("--variable", sweep_variable,
                        "alpha | theta | prior0");
  sweep_cmd->add_option("--quantity", sweep_quantity, "overlap | reading");
  sweep_cmd->add_option("--start", sweep_start, "grid start");
  sweep_cmd->add_option("--stop", sweep_stop, "grid stop");
  sweep_cmd->add_option("--points", sweep_points, "grid size (>= 2)");
  add_common_flags(sweep_cmd, sweep_flags, true);

  CommonFlags gram_flags;
  CLI::App* gram_cmd =
      app.add_subcommand("gram", "quasi-Bell Gram matrix entries");
  add_common_flags(gram_cmd, gram_flags, true);

  CommonFlags entropy_flags;
  double grid_start = 0.1, grid_stop = 3.0;
  int grid_points = 30;
  CLI::App* entropy_cmd = app.add_subcommand(
      "entropy", "entanglement degree of the quasi-Bell states");
  add_common_flags(entropy_cmd, entropy_flags, true);
  entropy_cmd->add_option("--start", grid_start, "alpha grid start");
  entropy_cmd->add_option("--stop", grid_stop, "alpha grid stop");
  entropy_cmd->add_option("--points", grid_points, "alpha grid size");

  CommonFlags qfi_flags;
  double qfi_start = 0.1, qfi_stop = 3.0;
  int qfi_points = 30;
  CLI::App* qfi_cmd =
      app.add_subcommand("qfi", "quantum Fisher information of the probes");
  add_common_flags(qfi_cmd, qfi_flags, true);
  qfi_cmd->add_option("--start", qfi_start, "alpha grid start");
  qfi_cmd->add_option("--stop", qfi_stop, "alpha grid stop");
  qfi_cmd->add_option("--points", qfi_points, "alpha grid size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (read_cmd->parsed()) {
      const qread::Table table =
          qread::run_reading(read_flags.alpha, parse_theta(read_flags.theta),
                             read_flags.prior0, experiment_options(read_flags));
      qread::emit(table, parse_format(read_flags.format), read_flags.out);
    } else if (sweep_cmd->parsed()) {
      qread::SweepSpec spec;
      if (sweep_variable == "alpha") {
        spec.variable = qread::SweepVariable::alpha;
        spec.start = 0.1;
        spec.stop = 3.0;
        spec.points = 30;
      } else if (sweep_variable == "theta") {
        spec.variable = qread::SweepVariable::theta;
        spec.start = 0.0;
        spec.stop = 2.0 * std::numbers::pi;
        spec.points = 145;
      } else if (sweep_variable == "prior0") {
        spec.variable = qread::SweepVariable::prior0;
        spec.start = 0.0;
        spec.stop = 1.0;
        spec.points = 21;
      } else {
        throw qread::DomainError("--variable must be alpha, theta or prior0");
      }
      if (sweep_cmd->count("--start") > 0) spec.start = sweep_start;
      if (sweep_cmd->count("--stop") > 0) spec.stop = sweep_stop;
      if (sweep_cmd->count("--points") > 0) spec.points = sweep_points;
      spec.fixed.alpha = sweep_flags.alpha;
      spec.fixed.theta = parse_theta(sweep_flags.theta);
      spec.fixed.prior0 = sweep_flags.prior0;

      qread::SweepQuantity quantity;
      if (sweep_quantity == "overlap")
        quantity = qread::SweepQuantity::overlap;
      else if (sweep_quantity == "reading")
        quantity = qread::SweepQuantity::reading;
      else
        throw qread::DomainError("--quantity must be overlap or reading");

      const qread::Table table =
          qread::run_sweep(spec, quantity, experiment_options(sweep_flags));
      qread::emit(table, parse_format(sweep_flags.format), sweep_flags.out);
    } else if (gram_cmd->parsed()) {
      const qread::Table table = qread::gram_table(
          qread::Complex(gram_flags.alpha), experiment_options(gram_flags));
      qread::emit(table, parse_format(gram_flags.format), gram_flags.out);
    } else if (entropy_cmd->parsed()) {
      const bool single = entropy_cmd->count("--alpha") > 0;
      const qread::Table table = qread::entropy_table(
          alpha_grid(entropy_flags, single, grid_start, grid_stop, grid_points),
          experiment_options(entropy_flags));
      qread::emit(table, parse_format(entropy_flags.format), entropy_flags.out);
    } else if (qfi_cmd->parsed()) {
      const bool single = qfi_cmd->count("--alpha") > 0;
      const qread::Table table = qread::qfi_table(
          alpha_grid(qfi_flags, single, qfi_start, qfi_stop, qfi_points),
          experiment_options(qfi_flags));
      qread::emit(table, parse_format(qfi_flags.format), qfi_flags.out);
    }
  } catch (const qread::CrossCheckError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
