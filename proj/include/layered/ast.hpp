// SPDX-License-Identifier: Apache-2.0
//
// Immutable ASTs for the two-sorted term/formula language. Formula leaves
// also admit normalized pi1-linear and pi2-polynomial atoms; the parser
// never produces those, they appear during atomic-formula splitting.
#pragma once

#include "layered/poly.hpp"

#include <memory>
#include <set>
#include <string>

namespace layered {

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

enum class TermKind { Var, Zero, One, Lit, LayerConst, Add, Mul, Pow, P1, P2 };

struct TermNode {
  TermKind kind;
  std::string name;      // Var
  LayeredElem lit;       // Lit
  LayerElem layer_const; // LayerConst
  Term a, b;             // children (Pow/P1/P2 use a)
  Int exp;               // Pow, >= 1
};

Term t_var(std::string name);
Term t_zero();
Term t_one();
Term t_lit(LayeredElem e);
Term t_layer_const(LayerElem l);
Term t_add(Term a, Term b);
Term t_mul(Term a, Term b);
Term t_pow(Term a, Int n);
Term t_p1(Term a);
Term t_p2(Term a);

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

enum class CmpRel { Eq, Lt };

/// pi2-sort atom: lhs = rhs, or lhs != rhs when neq is set.
struct LayAtom {
  LayPoly lhs, rhs;
  bool neq = false;

  bool operator==(const LayAtom &o) const = default;
};

enum class FormulaKind {
  True,
  False,
  Cmp,
  Not,
  And,
  Or,
  Implies,
  Exists,
  Forall,
  Lin,
  Lay
};

struct FormulaNode {
  FormulaKind kind;
  CmpRel rel = CmpRel::Eq; // Cmp
  Term t1, t2;             // Cmp
  Formula f1, f2;          // children
  std::string var;         // Exists/Forall
  LinAtom lin;             // Lin
  LayAtom lay;             // Lay
};

Formula f_true();
Formula f_false();
Formula f_cmp(CmpRel rel, Term a, Term b);
Formula f_eq(Term a, Term b);
Formula f_lt(Term a, Term b);
Formula f_not(Formula f);
Formula f_and(Formula a, Formula b);
Formula f_or(Formula a, Formula b);
Formula f_implies(Formula a, Formula b);
Formula f_exists(std::string var, Formula body);
Formula f_forall(std::string var, Formula body);
Formula f_lin(LinAtom a);
Formula f_lay(LayAtom a);

/// Conjunction/disjunction of a list; empty list gives the neutral element.
Formula f_and_all(const std::vector<Formula> &fs);
Formula f_or_all(const std::vector<Formula> &fs);

bool term_eq(const Term &a, const Term &b);
bool formula_eq(const Formula &a, const Formula &b);

std::set<std::string> term_vars(const Term &t);
std::set<std::string> free_vars(const Formula &f);
/// Every variable name occurring anywhere (free, bound, or inside
/// lin/lay atoms).
std::set<std::string> all_vars(const Formula &f);

bool quantifier_free(const Formula &f);
bool has_split_atoms(const Formula &f);

Term substitute_term(const Term &t, const std::string &var, const Term &repl);
/// Capture-avoiding substitution of a term for a free variable.
Formula substitute(const Formula &f, const std::string &var, const Term &repl);

/// Renames bound variables so they are distinct from free variables and
/// from each other (fresh names of the form base_k).
Formula rename_bound_apart(const Formula &f);

std::string fresh_name(const std::string &base,
                       const std::set<std::string> &taken);

} // namespace layered
