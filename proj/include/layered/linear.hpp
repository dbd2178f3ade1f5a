// SPDX-License-Identifier: Apache-2.0
//
// Exact linear reasoning over the densely ordered, divisible value sort:
// Gaussian substitution for equations, Fourier-Motzkin cross conditions for
// strict bounds. Strict atoms are exact over a dense order without
// endpoints, so elimination introduces no approximation.
#pragma once

#include "layered/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace layered {

/// Conjunction of normalized linear atoms.
struct LinSystem {
  std::vector<LinAtom> atoms;

  bool operator==(const LinSystem &o) const = default;
};

/// Adds an atom in canonical form; ground atoms fold immediately. Returns
/// false when the added atom (or the system) became trivially false.
bool lin_add_atom(LinSystem &sys, LinAtom a);

/// Eliminates `var`: equations substitute (the one with the smallest
/// |coefficient| wins, ties broken by canonical atom order), otherwise
/// strict bounds pair up. Atoms not mentioning the variable pass through.
/// Returns nullopt when the system is detected unsatisfiable on the way.
std::optional<LinSystem> lin_eliminate(const LinSystem &sys,
                                       const std::string &var);

/// Satisfiability over Q by eliminating every variable. Complete for
/// conjunctions of =, <, <= atoms.
bool lin_feasible(const LinSystem &sys);

/// A satisfying rational point for a feasible system (used by tests);
/// nullopt when infeasible.
std::optional<std::map<std::string, Rat>> lin_witness(const LinSystem &sys);

} // namespace layered
