// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "layered/decide.hpp"

namespace layered {

/// Command-line front end configuration. Exit codes: 0 success/true,
/// 1 false, 2 parse error, 3 unsupported fragment, 4 cap exceeded.
struct CliConfig {
  std::string command;            // qe decide eval simplify poly-eq axioms
  std::string layering = "nat";   // trivial | nat | posrat
  std::string assign;             // "x=[2]3,y=[5]3"
  std::string suite = "dlsf-l";   // axioms: ld | ld-l | dlsf | dlsf-l
  std::size_t monomial_cap = 16;
  std::size_t dnf_cap = 100000;
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
  bool json = false;   // axioms machine mode
  bool trace = false;  // qe elimination trace
  bool serial = false; // disable the parallel kernels
};

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliResult run(const CliConfig &config, const std::string &input_text);

LayerSemiring semiring_from_name(const std::string &name);

} // namespace layered
