// SPDX-License-Identifier: Apache-2.0
//
// Quantifier elimination: equality substitution over the divisible value
// sort, strict-bound pairing over the dense order, and layer-system solving
// on the pi2 sort. The zero element is handled by an up-front case split per
// variable, since linear reasoning presupposes rational pi1 values.
#pragma once

#include "layered/normal.hpp"

namespace layered {

/// Execution policy for the data-parallel kernels (per-clause elimination,
/// sample fan-out). Results are identical either way; the parallel path
/// exists for throughput only.
struct ExecPolicy {
  bool parallel = true;
};

struct QEReport {
  Formula result;
  std::vector<std::string> trace; // one entry per eliminated quantifier
};

/// Specializes a quantifier-free clause at var = 0 (first component) and
/// under the assumption var != 0 (second component, with zero-products and
/// zero comparisons rewritten away).
std::pair<Formula, Formula> zero_case_split(const std::string &var,
                                            const Formula &clause,
                                            const CanonicalModel &model);

/// Eliminates one existential variable from a conjunction of split atoms
/// (Lin/Lay/True/False literals). Returns a quantifier-free formula over
/// split atoms not mentioning the variable. Throws unsupported_error for
/// pi2-parametric systems outside the implemented fragment.
Formula eliminate_exists(const std::string &var,
                         const std::vector<Formula> &clause_literals,
                         const LayerSemiring &sr, const Caps &caps = {},
                         std::string *rule_out = nullptr);

/// Full quantifier elimination, innermost-out; universal quantifiers are
/// dualized. Quantifier-free input is returned unchanged.
QEReport qe(const Formula &f, const CanonicalModel &model,
            const Caps &caps = {}, const ExecPolicy &exec = {});

} // namespace layered
