// Copyright 2026 The choibasis Authors
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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "choibasis/commands.hpp"

namespace {

using choibasis::cli::kInputError;

std::optional<std::string> maybe(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal real-vector representation of quantum channels"};
  app.require_subcommand(1);

  choibasis::cli::Options opts;
  std::string layout = "product";
  std::string input;
  std::string output;
  int dx = 0;
  int dy = 0;
  int rank = 1;
  std::uint64_t seed = 0;

  const auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", opts.tol, "Tolerance for CP/TP/HP and validation")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
  };
  const auto add_membership = [&](CLI::App* cmd) {
    cmd->add_option("--membership-tol", opts.membership_tol,
                    "Trace-norm bound on the out-of-subspace residual")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
  };
  const auto add_layout = [&](CLI::App* cmd) {
    cmd->add_option("--layout", layout, "Basis layout")
        ->capture_default_str()
        ->check(CLI::IsMember({"product", "matrix-unit"}));
  };
  const auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", output, "Output file (default: stdout)");
  };
  const auto add_input = [&](CLI::App* cmd, const char* what) {
    cmd->add_option("input", input, what)->required();
  };

  auto* represent = app.add_subcommand(
      "represent", "Coefficient vector of a channel in the subspace basis");
  add_input(represent, "Matrix file, or - for stdin");
  add_output(represent);
  add_tol(represent);
  add_membership(represent);
  add_layout(represent);

  auto* combine =
      app.add_subcommand("combine", "Choi matrix from a coefficient vector");
  add_input(combine, "Vector file, or - for stdin");
  add_output(combine);

  auto* check = app.add_subcommand(
      "check", "Report CP/TP/HP, spectrum and order-unit pairing");
  add_input(check, "Matrix file, or - for stdin");
  add_tol(check);

  auto* roundtrip = app.add_subcommand(
      "roundtrip", "Trace-norm error of represent followed by combine");
  add_input(roundtrip, "Matrix file, or - for stdin");
  add_tol(roundtrip);
  add_membership(roundtrip);
  add_layout(roundtrip);

  auto* basis = app.add_subcommand("basis", "Dump the subspace basis");
  basis->add_option("--dx", dx, "Input dimension")->required();
  basis->add_option("--dy", dy, "Output dimension")->required();
  add_output(basis);
  add_layout(basis);

  auto* random = app.add_subcommand("random", "Random CP+TP channel");
  random->add_option("--dx", dx, "Input dimension")->required();
  random->add_option("--dy", dy, "Output dimension")->required();
  random->add_option("--rank", rank, "Number of Kraus operators")
      ->capture_default_str();
  random->add_option("--seed", seed, "Generator seed")->capture_default_str();
  add_output(random);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(kInputError);
  }

  try {
    opts.layout = choibasis::io::layout_from_string(layout);
  } catch (const choibasis::Error& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }

  std::ostream& out = std::cout;
  std::ostream& err = std::cerr;
  namespace cmd = choibasis::cli;
  if (*represent) return cmd::cmd_represent(input, maybe(output), opts, out, err);
  if (*combine) return cmd::cmd_combine(input, maybe(output), out, err);
  if (*check) return cmd::cmd_check(input, opts, out, err);
  if (*roundtrip) return cmd::cmd_roundtrip(input, opts, out, err);
  if (*basis) return cmd::cmd_basis(dx, dy, maybe(output), opts, out, err);
  if (*random) {
    return cmd::cmd_random(dx, dy, rank, seed, maybe(output), out, err);
  }
  return kInputError;
}
