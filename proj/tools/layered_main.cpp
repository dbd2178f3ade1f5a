// SPDX-License-Identifier: Apache-2.0
#include "layered/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_input(const std::string &path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"layered tropical semifield algebra, quantifier elimination "
               "and sentence decision"};
  app.require_subcommand(1);

  layered::CliConfig config;
  std::string input_path = "-";

  auto add_common = [&](CLI::App *cmd, bool takes_input) {
    cmd->add_option("--layering", config.layering,
                    "layering semiring: trivial | nat | posrat")
        ->check(CLI::IsMember({"trivial", "nat", "posrat"}));
    cmd->add_option("--monomial-cap", config.monomial_cap,
                    "max monomials per term in ordering analysis")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--dnf-cap", config.dnf_cap, "max DNF clauses")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", config.seed, "sampling seed");
    cmd->add_flag("--serial", config.serial, "disable parallel kernels");
    if (takes_input)
      cmd->add_option("input", input_path, "input file, or - for stdin");
  };

  auto *qe = app.add_subcommand("qe", "eliminate quantifiers from a formula");
  add_common(qe, true);
  qe->add_flag("--trace", config.trace, "print the elimination trace");

  auto *decide = app.add_subcommand("decide", "decide a closed formula");
  add_common(decide, true);

  auto *eval = app.add_subcommand("eval", "evaluate a term");
  add_common(eval, true);
  eval->add_option("--assign", config.assign,
                   "assignment, e.g. x=[2]3,y=[5]3");

  auto *simplify =
      app.add_subcommand("simplify", "essential-form DNF of a formula");
  add_common(simplify, true);

  auto *polyeq = app.add_subcommand(
      "poly-eq", "decide polynomial identity (two terms joined by '==')");
  add_common(polyeq, true);
  polyeq->add_option("--samples", config.samples,
                     "counterexample search samples");

  auto *axioms = app.add_subcommand("axioms", "check an axiom suite");
  add_common(axioms, false);
  axioms->add_option("--suite", config.suite,
                     "axiom suite: ld | ld-l | dlsf | dlsf-l")
      ->check(CLI::IsMember({"ld", "ld-l", "dlsf", "dlsf-l"}));
  axioms->add_option("--samples", config.samples, "samples per axiom");
  axioms->add_flag("--json", config.json, "machine-readable records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0)
      return app.exit(e); // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  config.command = app.get_subcommands().front()->get_name();

  std::string input;
  if (config.command != "axioms") {
    try {
      input = read_input(input_path);
    } catch (const std::exception &e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
  }

  layered::CliResult res = layered::run(config, input);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
