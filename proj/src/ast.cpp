// SPDX-License-Identifier: Apache-2.0
#include "layered/ast.hpp"

#include <functional>

namespace layered {

static Term mk_term(TermNode n) {
  return std::make_shared<const TermNode>(std::move(n));
}

Term t_var(std::string name) {
  TermNode n{};
  n.kind = TermKind::Var;
  n.name = std::move(name);
  return mk_term(std::move(n));
}
Term t_zero() {
  TermNode n{};
  n.kind = TermKind::Zero;
  return mk_term(std::move(n));
}
Term t_one() {
  TermNode n{};
  n.kind = TermKind::One;
  return mk_term(std::move(n));
}
Term t_lit(LayeredElem e) {
  TermNode n{};
  n.kind = TermKind::Lit;
  n.lit = std::move(e);
  return mk_term(std::move(n));
}
Term t_layer_const(LayerElem l) {
  TermNode n{};
  n.kind = TermKind::LayerConst;
  n.layer_const = std::move(l);
  return mk_term(std::move(n));
}
Term t_add(Term a, Term b) {
  TermNode n{};
  n.kind = TermKind::Add;
  n.a = std::move(a);
  n.b = std::move(b);
  return mk_term(std::move(n));
}
Term t_mul(Term a, Term b) {
  TermNode n{};
  n.kind = TermKind::Mul;
  n.a = std::move(a);
  n.b = std::move(b);
  return mk_term(std::move(n));
}
Term t_pow(Term a, Int k) {
  if (k < 1)
    throw std::logic_error("power exponent must be >= 1");
  TermNode n{};
  n.kind = TermKind::Pow;
  n.a = std::move(a);
  n.exp = std::move(k);
  return mk_term(std::move(n));
}
Term t_p1(Term a) {
  TermNode n{};
  n.kind = TermKind::P1;
  n.a = std::move(a);
  return mk_term(std::move(n));
}
Term t_p2(Term a) {
  TermNode n{};
  n.kind = TermKind::P2;
  n.a = std::move(a);
  return mk_term(std::move(n));
}

static Formula mk_formula(FormulaNode n) {
  return std::make_shared<const FormulaNode>(std::move(n));
}

Formula f_true() {
  FormulaNode n{};
  n.kind = FormulaKind::True;
  return mk_formula(std::move(n));
}
Formula f_false() {
  FormulaNode n{};
  n.kind = FormulaKind::False;
  return mk_formula(std::move(n));
}
Formula f_cmp(CmpRel rel, Term a, Term b) {
  FormulaNode n{};
  n.kind = FormulaKind::Cmp;
  n.rel = rel;
  n.t1 = std::move(a);
  n.t2 = std::move(b);
  return mk_formula(std::move(n));
}
Formula f_eq(Term a, Term b) { return f_cmp(CmpRel::Eq, std::move(a), std::move(b)); }
Formula f_lt(Term a, Term b) { return f_cmp(CmpRel::Lt, std::move(a), std::move(b)); }
Formula f_not(Formula f) {
  FormulaNode n{};
  n.kind = FormulaKind::Not;
  n.f1 = std::move(f);
  return mk_formula(std::move(n));
}
Formula f_and(Formula a, Formula b) {
  FormulaNode n{};
  n.kind = FormulaKind::And;
  n.f1 = std::move(a);
  n.f2 = std::move(b);
  return mk_formula(std::move(n));
}
Formula f_or(Formula a, Formula b) {
  FormulaNode n{};
  n.kind = FormulaKind::Or;
  n.f1 = std::move(a);
  n.f2 = std::move(b);
  return mk_formula(std::move(n));
}
Formula f_implies(Formula a, Formula b) {
  FormulaNode n{};
  n.kind = FormulaKind::Implies;
  n.f1 = std::move(a);
  n.f2 = std::move(b);
  return mk_formula(std::move(n));
}
Formula f_exists(std::string var, Formula body) {
  FormulaNode n{};
  n.kind = FormulaKind::Exists;
  n.var = std::move(var);
  n.f1 = std::move(body);
  return mk_formula(std::move(n));
}
Formula f_forall(std::string var, Formula body) {
  FormulaNode n{};
  n.kind = FormulaKind::Forall;
  n.var = std::move(var);
  n.f1 = std::move(body);
  return mk_formula(std::move(n));
}
Formula f_lin(LinAtom a) {
  FormulaNode n{};
  n.kind = FormulaKind::Lin;
  n.lin = std::move(a);
  return mk_formula(std::move(n));
}
Formula f_lay(LayAtom a) {
  FormulaNode n{};
  n.kind = FormulaKind::Lay;
  n.lay = std::move(a);
  return mk_formula(std::move(n));
}

// balanced folds keep recursion depth logarithmic in later passes
static Formula fold_balanced(const std::vector<Formula> &fs, std::size_t lo,
                             std::size_t hi, bool conj) {
  if (hi - lo == 1)
    return fs[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  Formula l = fold_balanced(fs, lo, mid, conj);
  Formula r = fold_balanced(fs, mid, hi, conj);
  return conj ? f_and(l, r) : f_or(l, r);
}

Formula f_and_all(const std::vector<Formula> &fs) {
  if (fs.empty())
    return f_true();
  return fold_balanced(fs, 0, fs.size(), true);
}
Formula f_or_all(const std::vector<Formula> &fs) {
  if (fs.empty())
    return f_false();
  return fold_balanced(fs, 0, fs.size(), false);
}

bool term_eq(const Term &a, const Term &b) {
  if (a == b)
    return true;
  if (!a || !b || a->kind != b->kind)
    return false;
  switch (a->kind) {
  case TermKind::Var:
    return a->name == b->name;
  case TermKind::Zero:
  case TermKind::One:
    return true;
  case TermKind::Lit:
    return a->lit == b->lit;
  case TermKind::LayerConst:
    return a->layer_const == b->layer_const;
  case TermKind::Add:
  case TermKind::Mul:
    return term_eq(a->a, b->a) && term_eq(a->b, b->b);
  case TermKind::Pow:
    return a->exp == b->exp && term_eq(a->a, b->a);
  case TermKind::P1:
  case TermKind::P2:
    return term_eq(a->a, b->a);
  }
  return false;
}

bool formula_eq(const Formula &a, const Formula &b) {
  if (a == b)
    return true;
  if (!a || !b || a->kind != b->kind)
    return false;
  switch (a->kind) {
  case FormulaKind::True:
  case FormulaKind::False:
    return true;
  case FormulaKind::Cmp:
    return a->rel == b->rel && term_eq(a->t1, b->t1) && term_eq(a->t2, b->t2);
  case FormulaKind::Not:
    return formula_eq(a->f1, b->f1);
  case FormulaKind::And:
  case FormulaKind::Or:
  case FormulaKind::Implies:
    return formula_eq(a->f1, b->f1) && formula_eq(a->f2, b->f2);
  case FormulaKind::Exists:
  case FormulaKind::Forall:
    return a->var == b->var && formula_eq(a->f1, b->f1);
  case FormulaKind::Lin:
    return a->lin == b->lin;
  case FormulaKind::Lay:
    return a->lay == b->lay;
  }
  return false;
}

static void term_vars_into(const Term &t, std::set<std::string> &out) {
  if (!t)
    return;
  if (t->kind == TermKind::Var)
    out.insert(t->name);
  term_vars_into(t->a, out);
  term_vars_into(t->b, out);
}

std::set<std::string> term_vars(const Term &t) {
  std::set<std::string> out;
  term_vars_into(t, out);
  return out;
}

static void atom_vars_into(const FormulaNode &n, std::set<std::string> &out) {
  if (n.kind == FormulaKind::Cmp) {
    term_vars_into(n.t1, out);
    term_vars_into(n.t2, out);
  } else if (n.kind == FormulaKind::Lin) {
    for (const auto &[v, c] : n.lin.coeffs)
      out.insert(v);
  } else if (n.kind == FormulaKind::Lay) {
    for (const auto &v : lay_vars(n.lay.lhs))
      out.insert(v);
    for (const auto &v : lay_vars(n.lay.rhs))
      out.insert(v);
  }
}

static void free_vars_into(const Formula &f, std::set<std::string> &bound,
                           std::set<std::string> &out) {
  if (!f)
    return;
  switch (f->kind) {
  case FormulaKind::Exists:
  case FormulaKind::Forall: {
    bool was_bound = bound.count(f->var) > 0;
    bound.insert(f->var);
    free_vars_into(f->f1, bound, out);
    if (!was_bound)
      bound.erase(f->var);
    return;
  }
  default: {
    std::set<std::string> here;
    atom_vars_into(*f, here);
    for (const auto &v : here)
      if (!bound.count(v))
        out.insert(v);
    free_vars_into(f->f1, bound, out);
    free_vars_into(f->f2, bound, out);
  }
  }
}

std::set<std::string> free_vars(const Formula &f) {
  std::set<std::string> bound, out;
  free_vars_into(f, bound, out);
  return out;
}

static void all_vars_into(const Formula &f, std::set<std::string> &out) {
  if (!f)
    return;
  atom_vars_into(*f, out);
  if (f->kind == FormulaKind::Exists || f->kind == FormulaKind::Forall)
    out.insert(f->var);
  all_vars_into(f->f1, out);
  all_vars_into(f->f2, out);
}

std::set<std::string> all_vars(const Formula &f) {
  std::set<std::string> out;
  all_vars_into(f, out);
  return out;
}

bool quantifier_free(const Formula &f) {
  if (!f)
    return true;
  if (f->kind == FormulaKind::Exists || f->kind == FormulaKind::Forall)
    return false;
  return quantifier_free(f->f1) && quantifier_free(f->f2);
}

bool has_split_atoms(const Formula &f) {
  if (!f)
    return false;
  if (f->kind == FormulaKind::Lin || f->kind == FormulaKind::Lay)
    return true;
  return has_split_atoms(f->f1) || has_split_atoms(f->f2);
}

Term substitute_term(const Term &t, const std::string &var, const Term &repl) {
  if (!t)
    return t;
  switch (t->kind) {
  case TermKind::Var:
    return t->name == var ? repl : t;
  case TermKind::Add:
    return t_add(substitute_term(t->a, var, repl),
                 substitute_term(t->b, var, repl));
  case TermKind::Mul:
    return t_mul(substitute_term(t->a, var, repl),
                 substitute_term(t->b, var, repl));
  case TermKind::Pow:
    return t_pow(substitute_term(t->a, var, repl), t->exp);
  case TermKind::P1:
    return t_p1(substitute_term(t->a, var, repl));
  case TermKind::P2:
    return t_p2(substitute_term(t->a, var, repl));
  default:
    return t;
  }
}

std::string fresh_name(const std::string &base,
                       const std::set<std::string> &taken) {
  if (!taken.count(base))
    return base;
  for (int i = 1;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (!taken.count(cand))
      return cand;
  }
}

Formula substitute(const Formula &f, const std::string &var,
                   const Term &repl) {
  if (!f)
    return f;
  switch (f->kind) {
  case FormulaKind::True:
  case FormulaKind::False:
    return f;
  case FormulaKind::Cmp:
    return f_cmp(f->rel, substitute_term(f->t1, var, repl),
                 substitute_term(f->t2, var, repl));
  case FormulaKind::Not:
    return f_not(substitute(f->f1, var, repl));
  case FormulaKind::And:
    return f_and(substitute(f->f1, var, repl), substitute(f->f2, var, repl));
  case FormulaKind::Or:
    return f_or(substitute(f->f1, var, repl), substitute(f->f2, var, repl));
  case FormulaKind::Implies:
    return f_implies(substitute(f->f1, var, repl),
                     substitute(f->f2, var, repl));
  case FormulaKind::Exists:
  case FormulaKind::Forall: {
    if (f->var == var)
      return f; // var is shadowed
    auto repl_vars = term_vars(repl);
    Formula body = f->f1;
    std::string bvar = f->var;
    if (repl_vars.count(bvar)) {
      // capture: rename the bound variable first
      std::set<std::string> taken = all_vars(f);
      taken.insert(repl_vars.begin(), repl_vars.end());
      taken.insert(var);
      std::string nb = fresh_name(bvar, taken);
      body = substitute(body, bvar, t_var(nb));
      bvar = nb;
    }
    body = substitute(body, var, repl);
    return f->kind == FormulaKind::Exists ? f_exists(bvar, body)
                                          : f_forall(bvar, body);
  }
  case FormulaKind::Lin:
  case FormulaKind::Lay:
    // substitution of terms into normalized atoms is not defined; these
    // leaves only appear after splitting, where substitution is layer/linear
    throw std::logic_error("substitute on split atom");
  }
  return f;
}

static Formula rename_apart_rec(const Formula &f,
                                std::set<std::string> &taken) {
  if (!f)
    return f;
  switch (f->kind) {
  case FormulaKind::Exists:
  case FormulaKind::Forall: {
    std::string nb = fresh_name(f->var, taken);
    taken.insert(nb);
    Formula body = f->f1;
    if (nb != f->var)
      body = substitute(body, f->var, t_var(nb));
    body = rename_apart_rec(body, taken);
    return f->kind == FormulaKind::Exists ? f_exists(nb, body)
                                          : f_forall(nb, body);
  }
  case FormulaKind::Not:
    return f_not(rename_apart_rec(f->f1, taken));
  case FormulaKind::And:
    return f_and(rename_apart_rec(f->f1, taken),
                 rename_apart_rec(f->f2, taken));
  case FormulaKind::Or:
    return f_or(rename_apart_rec(f->f1, taken),
                rename_apart_rec(f->f2, taken));
  case FormulaKind::Implies:
    return f_implies(rename_apart_rec(f->f1, taken),
                     rename_apart_rec(f->f2, taken));
  default:
    return f;
  }
}

Formula rename_bound_apart(const Formula &f) {
  std::set<std::string> taken = free_vars(f);
  return rename_apart_rec(f, taken);
}

} // namespace layered
