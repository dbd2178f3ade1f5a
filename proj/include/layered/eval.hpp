// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "layered/ast.hpp"

#include <map>

namespace layered {

using Assignment = std::map<std::string, LayeredElem>;

LayeredElem eval_term(const Term &t, const Assignment &sigma,
                      const CanonicalModel &model);

/// Quantifier-free formulas only; Lin leaves additionally require non-zero
/// values for their variables (the splitting pipeline guarantees this).
bool eval_formula(const Formula &f, const Assignment &sigma,
                  const CanonicalModel &model);

std::string assignment_to_string(const Assignment &sigma);

} // namespace layered
