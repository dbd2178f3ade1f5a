// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "layered/ast.hpp"

namespace layered {

/// Prints in the surface grammar without simplification; parse(pretty(f))
/// is structurally f. Split atoms (Lin/Lay leaves) are printed through the
/// equivalent surface form.
std::string pretty(const Term &t);
std::string pretty(const Formula &f);

} // namespace layered
