// SPDX-License-Identifier: Apache-2.0
//
// Term normalization and atomic-formula splitting. A term expands to a sum
// of monomials; orderings of the monomials (which subset is tied dominant)
// partition the space of assignments, and an atomic formula over two terms
// becomes a conjunction, over jointly feasible ordering pairs, of pi1-linear
// and pi2-polynomial conditions.
#pragma once

#include "layered/ast.hpp"
#include "layered/eval.hpp"
#include "layered/linear.hpp"

namespace layered {

/// Canonical polynomial form of a term. Projections fold over products,
/// powers, compositions and ground subterms; a projection of a sum is not a
/// polynomial and throws std::invalid_argument (formula-level operations
/// remove those first via ordering case splits, see split_atom).
PolyNF to_poly(const Term &t, LayerKind kind);

/// A partition of a term's monomial indices into the tied dominant set I
/// (nonempty) and the dominated set J.
struct MonomialOrdering {
  std::vector<std::size_t> dominant;  // I
  std::vector<std::size_t> dominated; // J
};

/// All 2^(m+1)-1 orderings of a poly with m+1 monomials, in ascending
/// bitmask order. Throws cap_error past caps.monomials.
std::vector<MonomialOrdering> enumerate_mtos(const PolyNF &p,
                                             const Caps &caps = {});

/// The ordering's defining condition: pi1 equalities chaining the dominant
/// set and strict dominations of its representative over every dominated
/// monomial, as normalized linear atoms (ground atoms included).
std::vector<LinAtom> delta_condition_atoms(const PolyNF &p,
                                           const MonomialOrdering &o);
/// Same condition as a formula with ground atoms folded.
Formula delta_condition(const PolyNF &p, const MonomialOrdering &o);

/// Keeps exactly the monomials that can be tied-dominant for some
/// assignment; the result evaluates identically to p everywhere.
PolyNF essential_form(const PolyNF &p, const Caps &caps = {});

/// Splits an atomic formula into pi1-linear / pi2-polynomial atoms by the
/// conjunction over all jointly feasible ordering pairs of the two sides.
/// Exact at every assignment whose variables avoid the zero element (the
/// elimination pipeline guarantees that via its zero case split).
Formula split_atom(CmpRel rel, const Term &lhs, const Term &rhs,
                   const LayerSemiring &sr, const Caps &caps = {});

/// Applies split_atom to every surface atom of a quantifier-free formula.
Formula split_all_atoms(const Formula &f, const LayerSemiring &sr,
                        const Caps &caps = {});

/// Negation normal form. Negated linear atoms resolve by trichotomy of the
/// value order, negated layer atoms toggle; negated surface atoms remain as
/// literals.
Formula nnf(const Formula &f);

/// DNF clauses of a quantifier-free formula (nnf is applied internally).
/// Clause literals are deduplicated; clauses with directly complementary
/// layer literals are dropped. Throws cap_error past caps.dnf_clauses.
std::vector<std::vector<Formula>> dnf_clauses(const Formula &f,
                                              const Caps &caps = {});
Formula dnf(const Formula &f, const Caps &caps = {});

/// Boolean/ground constant folding (exact evaluation of variable-free
/// atoms; quantifiers over constant bodies collapse).
Formula fold_constants(const Formula &f, const CanonicalModel &model);

/// Surface form of split atoms: products of projected variables and one
/// element literal per side. Layer atoms convert exactly; linear atoms are
/// exact wherever their variables avoid the zero element.
Formula lin_to_surface(const LinAtom &a, LayerKind kind);
Formula lay_to_surface(const LayAtom &a);
Formula split_to_surface(const Formula &f, LayerKind kind);

/// Linear atom comparing two monomials' pi1 values (a rel b).
LinAtom lin_from_monomials(const Monomial &a, const Monomial &b, LinRel rel);

/// Layer atom maker with canonicalization, cancellation and folding; for
/// the trivial semiring this always folds to a constant.
Formula make_lay_atom(LayPoly lhs, LayPoly rhs, bool neq);

/// Rebuilds a monomial as a term (coefficient literal times projected
/// variable powers).
Term mono_to_term(const Monomial &m);

/// Linear atom as a formula, ground atoms folded.
Formula f_lin_folded(LinAtom a);

/// Negation of a linear atom by trichotomy, as a formula.
Formula negate_lin(const LinAtom &a);

} // namespace layered
