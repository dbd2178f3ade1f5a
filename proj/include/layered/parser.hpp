// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "layered/ast.hpp"

namespace layered {

/// Parses to an AST or throws parse_error with 1-based position info.
/// Layer literals are validated against the active semiring. Surface
/// desugarings applied here: a != b  ->  ~(a = b);  a <= b  ->  a < b | a = b;
/// a >= b and a > b by swapping;  PL(t)  ->  t = p2(t).
Term parse_term(const std::string &text, const LayerSemiring &semiring);
Formula parse_formula(const std::string &text, const LayerSemiring &semiring);

/// Parses an element literal ("0", "1", "[2]3", "[1/2]-7/2").
LayeredElem parse_element(const std::string &text,
                          const LayerSemiring &semiring);

} // namespace layered
