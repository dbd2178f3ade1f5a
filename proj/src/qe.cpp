// SPDX-License-Identifier: Apache-2.0
#include "layered/qe.hpp"

#include "layered/printer.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace layered {

// ---------------------------------------------------------------------------
// zero case split

namespace {

// t = 0 as a formula, under the assumption nonzero != 0
Formula zero_eq(const Term &t, const std::string &nonzero) {
  switch (t->kind) {
  case TermKind::Var:
    return t->name == nonzero ? f_false() : f_eq(t, t_zero());
  case TermKind::Zero:
    return f_true();
  case TermKind::One:
  case TermKind::LayerConst:
    return f_false();
  case TermKind::Lit:
    return t->lit.is_zero() ? f_true() : f_false();
  case TermKind::Mul: // x*y = 0 iff x = 0 or y = 0
    return f_or(zero_eq(t->a, nonzero), zero_eq(t->b, nonzero));
  case TermKind::Pow:
    return zero_eq(t->a, nonzero);
  case TermKind::Add: // a max is bottom iff both arguments are
    return f_and(zero_eq(t->a, nonzero), zero_eq(t->b, nonzero));
  case TermKind::P1:
    return zero_eq(t->a, nonzero); // pi1(x) = 0 iff x = 0
  case TermKind::P2:
    return f_false(); // pi2 lands in the unit-value fiber
  }
  throw std::logic_error("bad term node");
}

bool is_zero_term(const Term &t) {
  return t->kind == TermKind::Zero ||
         (t->kind == TermKind::Lit && t->lit.is_zero());
}

Formula assume_nonzero(const Formula &f, const std::string &var) {
  switch (f->kind) {
  case FormulaKind::True:
  case FormulaKind::False:
  case FormulaKind::Lin:
  case FormulaKind::Lay:
    return f;
  case FormulaKind::Cmp: {
    if (term_eq(f->t1, f->t2))
      return f->rel == CmpRel::Eq ? f_true() : f_false();
    if (f->rel == CmpRel::Eq) {
      if (is_zero_term(f->t2))
        return zero_eq(f->t1, var);
      if (is_zero_term(f->t1))
        return zero_eq(f->t2, var);
    } else {
      if (is_zero_term(f->t2))
        return f_false(); // nothing is below 0
      if (is_zero_term(f->t1))
        return f_not(zero_eq(f->t2, var)); // 0 < t iff t != 0
    }
    return f;
  }
  case FormulaKind::Not:
    return f_not(assume_nonzero(f->f1, var));
  case FormulaKind::And:
    return f_and(assume_nonzero(f->f1, var), assume_nonzero(f->f2, var));
  case FormulaKind::Or:
    return f_or(assume_nonzero(f->f1, var), assume_nonzero(f->f2, var));
  case FormulaKind::Implies:
    return f_implies(assume_nonzero(f->f1, var), assume_nonzero(f->f2, var));
  case FormulaKind::Exists:
  case FormulaKind::Forall:
    throw std::logic_error("zero_case_split on quantified clause");
  }
  throw std::logic_error("bad formula node");
}

} // namespace

std::pair<Formula, Formula> zero_case_split(const std::string &var,
                                            const Formula &clause,
                                            const CanonicalModel &model) {
  Formula at_zero =
      fold_constants(substitute(clause, var, t_zero()), model);
  Formula nonzero = fold_constants(assume_nonzero(clause, var), model);
  return {at_zero, nonzero};
}

// ---------------------------------------------------------------------------
// layer-side elimination

namespace {

bool lay_atom_mentions(const LayAtom &a, const std::string &var) {
  return lay_vars(a.lhs).count(var) || lay_vars(a.rhs).count(var);
}

// single monomial var^1 with unit coefficient?
std::optional<LayerElem> single_var_coeff(const LayPoly &p,
                                          const std::string &var) {
  if (p.monomials.size() != 1)
    return std::nullopt;
  const auto &m = p.monomials.front();
  if (m.exps.size() != 1)
    return std::nullopt;
  auto it = m.exps.begin();
  if (it->first != var || it->second != 1)
    return std::nullopt;
  return m.coeff;
}

// divide every coefficient of p by c, if the quotients stay in the semiring
std::optional<LayPoly> lay_divide_coeffs(const LayPoly &p,
                                         const LayerElem &c) {
  LayPoly out{p.kind, {}};
  for (const auto &m : p.monomials) {
    Rat q = m.coeff.v / c.v;
    if (p.kind == LayerKind::Nat && (rat_den(q) != 1 || q < 1))
      return std::nullopt;
    out.monomials.push_back(LayMonomial{m.exps, LayerElem{p.kind, q}});
  }
  return lay_canonical(std::move(out));
}

std::set<Int> w_degree_support(const LayPoly &p, const std::string &var) {
  std::set<Int> degs;
  for (const auto &m : p.monomials) {
    auto it = m.exps.find(var);
    degs.insert(it == m.exps.end() ? Int(0) : it->second);
  }
  return degs;
}

// Eliminates "exists a layer value for var" from a set of layer atoms.
// Returns the residual formula (atoms not mentioning var, plus resolved
// conditions); throws unsupported_error outside the ground/reducible
// fragment.
Formula eliminate_layer(const std::string &var, std::vector<LayAtom> atoms) {
  std::vector<Formula> out_parts;

  for (bool changed = true; changed;) {
    changed = false;
    // refold everything (cancellation can resolve atoms outright)
    std::vector<LayAtom> next;
    for (const auto &a : atoms) {
      Formula g = make_lay_atom(a.lhs, a.rhs, a.neq);
      if (g->kind == FormulaKind::False)
        return f_false();
      if (g->kind == FormulaKind::True)
        continue;
      next.push_back(g->lay);
    }
    atoms = std::move(next);

    // substitution: an equation pinning var to a var-free polynomial
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const LayAtom &a = atoms[i];
      if (a.neq)
        continue;
      for (bool flip : {false, true}) {
        const LayPoly &solved = flip ? a.rhs : a.lhs;
        const LayPoly &other = flip ? a.lhs : a.rhs;
        auto coeff = single_var_coeff(solved, var);
        if (!coeff || lay_vars(other).count(var))
          continue;
        auto repl = lay_divide_coeffs(other, *coeff);
        if (!repl)
          continue;
        std::vector<LayAtom> substituted;
        for (std::size_t j = 0; j < atoms.size(); ++j) {
          if (j == i)
            continue;
          substituted.push_back(LayAtom{lay_substitute(atoms[j].lhs, var, *repl),
                                        lay_substitute(atoms[j].rhs, var, *repl),
                                        atoms[j].neq});
        }
        atoms = std::move(substituted);
        changed = true;
        break;
      }
      if (changed)
        break;
    }
  }

  std::vector<LayAtom> with_var;
  for (auto &a : atoms) {
    if (lay_atom_mentions(a, var))
      with_var.push_back(std::move(a));
    else
      out_parts.push_back(f_lay(std::move(a)));
  }
  if (with_var.empty())
    return f_and_all(out_parts);

  auto univariate = [&](const LayAtom &a, LayerPoly &l, LayerPoly &r) {
    return lay_to_univariate(a.lhs, var, l) && lay_to_univariate(a.rhs, var, r);
  };

  std::vector<std::pair<LayerPoly, LayerPoly>> eqs, diseqs;
  bool all_ground = true;
  for (const auto &a : with_var) {
    LayerPoly l, r;
    if (!univariate(a, l, r)) {
      all_ground = false;
      break;
    }
    (a.neq ? diseqs : eqs).emplace_back(std::move(l), std::move(r));
  }
  if (all_ground) {
    auto res = solve_layer_system(eqs, diseqs);
    if (res.tag == LayerSolveResult::Tag::Unsupported)
      throw unsupported_error(res.reason);
    if (res.tag == LayerSolveResult::Tag::Unsat)
      return f_false();
    return f_and_all(out_parts);
  }

  // ground equations + parametric disequations: expand per equation root
  std::vector<std::pair<LayerPoly, LayerPoly>> ground_eqs;
  std::vector<LayAtom> residue;
  bool eqs_ground = true;
  for (const auto &a : with_var) {
    if (!a.neq) {
      LayerPoly l, r;
      if (univariate(a, l, r))
        ground_eqs.emplace_back(std::move(l), std::move(r));
      else
        eqs_ground = false;
    } else {
      residue.push_back(a);
    }
  }
  if (eqs_ground && !ground_eqs.empty()) {
    auto sols = layer_equation_solutions(ground_eqs);
    if (sols) {
      std::vector<Formula> pieces;
      for (const auto &y : *sols) {
        LayPoly cy = lay_const(y);
        std::vector<Formula> conj;
        for (const auto &a : residue)
          conj.push_back(make_lay_atom(lay_substitute(a.lhs, var, cy),
                                       lay_substitute(a.rhs, var, cy), a.neq));
        pieces.push_back(f_and_all(conj));
      }
      out_parts.push_back(f_or_all(pieces));
      return f_and_all(out_parts);
    }
  }

  // parametric: equations are out of reach unless resolved above
  for (const auto &a : with_var)
    if (!a.neq)
      throw unsupported_error(
          "pi2-sort equation with free layer parameters (variable " + var +
          ")");

  // disequations only: each must pin a var-degree to one side, so its
  // difference is nonzero for every parameter value; finitely many bad
  // choices per disequation and L is infinite
  for (const auto &a : with_var) {
    auto dl = w_degree_support(a.lhs, var);
    auto dr = w_degree_support(a.rhs, var);
    std::vector<Int> inter;
    std::set_intersection(dl.begin(), dl.end(), dr.begin(), dr.end(),
                          std::back_inserter(inter));
    if (!inter.empty())
      throw unsupported_error(
          "pi2-sort disequation with free layer parameters (variable " + var +
          ")");
  }
  return f_and_all(out_parts);
}

} // namespace

// ---------------------------------------------------------------------------
// single-variable elimination over a split clause

Formula eliminate_exists(const std::string &var,
                         const std::vector<Formula> &clause_literals,
                         const LayerSemiring &sr, const Caps &caps,
                         std::string *rule_out) {
  (void)caps;
  LinSystem sys;
  std::vector<LayAtom> lays;
  for (const auto &lit : clause_literals) {
    switch (lit->kind) {
    case FormulaKind::Lin:
      if (!lin_add_atom(sys, lit->lin)) {
        if (rule_out)
          *rule_out = "ground-false";
        return f_false();
      }
      break;
    case FormulaKind::Lay:
      lays.push_back(lit->lay);
      break;
    case FormulaKind::True:
      break;
    case FormulaKind::False:
      if (rule_out)
        *rule_out = "ground-false";
      return f_false();
    default:
      throw std::logic_error("eliminate_exists expects split literals");
    }
  }

  bool had_eq = false, had_bound = false;
  for (const auto &a : sys.atoms)
    if (a.coeffs.count(var)) {
      (a.rel == LinRel::Eq ? had_eq : had_bound) = true;
    }

  auto reduced = lin_eliminate(sys, var);
  if (!reduced) {
    if (rule_out)
      *rule_out = "value-contradiction";
    return f_false();
  }

  std::vector<Formula> parts;
  for (const auto &a : reduced->atoms)
    parts.push_back(f_lin(a));

  (void)sr;
  bool lay_mentions = false;
  for (const auto &a : lays)
    lay_mentions |= lay_atom_mentions(a, var);
  Formula layer_part = eliminate_layer(var, std::move(lays));
  if (layer_part->kind == FormulaKind::False) {
    if (rule_out)
      *rule_out = "layer-contradiction";
    return f_false();
  }
  if (layer_part->kind != FormulaKind::True)
    parts.push_back(layer_part);

  if (rule_out) {
    std::string r = had_eq          ? "equality-substitution"
                    : had_bound     ? "bound-pairing"
                                    : "no-value-constraints";
    if (lay_mentions)
      r += "+layer-solve";
    *rule_out = r;
  }
  return f_and_all(parts);
}

// ---------------------------------------------------------------------------
// full elimination

namespace {

// does var demand a rational pi1 value anywhere in t?
bool under_p2_needs_value(const Term &t, const std::string &var);

bool term_needs_value(const Term &t, const std::string &var) {
  if (!t)
    return false;
  switch (t->kind) {
  case TermKind::Var:
    return t->name == var;
  case TermKind::Add:
  case TermKind::Mul:
    return term_needs_value(t->a, var) || term_needs_value(t->b, var);
  case TermKind::Pow:
  case TermKind::P1:
    return term_needs_value(t->a, var);
  case TermKind::P2:
    return under_p2_needs_value(t->a, var);
  default:
    return false;
  }
}

bool under_p2_needs_value(const Term &t, const std::string &var) {
  if (!t)
    return false;
  switch (t->kind) {
  case TermKind::Var:
    return false; // pi2(var) never consults the value
  case TermKind::Add:
    // ordering case split of a sum under pi2 compares pi1 values
    return term_vars(t).count(var) > 0;
  case TermKind::Mul:
    return under_p2_needs_value(t->a, var) || under_p2_needs_value(t->b, var);
  case TermKind::Pow:
    return under_p2_needs_value(t->a, var);
  case TermKind::P1:
    return false; // pi2(pi1(t)) = 1
  case TermKind::P2:
    return under_p2_needs_value(t->a, var);
  default:
    return false;
  }
}

bool formula_needs_value(const Formula &f, const std::string &var) {
  if (!f)
    return false;
  switch (f->kind) {
  case FormulaKind::Cmp:
    return term_needs_value(f->t1, var) || term_needs_value(f->t2, var);
  case FormulaKind::Lin:
    return f->lin.coeffs.count(var) > 0;
  case FormulaKind::Lay:
    return false;
  default:
    return formula_needs_value(f->f1, var) || formula_needs_value(f->f2, var);
  }
}

struct ElimContext {
  const CanonicalModel &model;
  Caps caps;
  ExecPolicy exec;
  std::vector<std::string> trace;
};

// eliminate "exists var. body" for quantifier-free body
Formula eliminate_quantifier(const std::string &var, Formula body,
                             ElimContext &ctx) {
  body = fold_constants(body, ctx.model);
  if (!free_vars(body).count(var)) {
    ctx.trace.push_back("exists " + var + ": vacuous");
    return body;
  }

  // case split on which variables sit at the zero element; only variables
  // whose pi1 value is consulted need it
  std::vector<std::string> split_vars;
  for (const auto &v : all_vars(body))
    if (formula_needs_value(body, v))
      split_vars.push_back(v);
  if (split_vars.size() >= 8 * sizeof(std::size_t) ||
      (std::size_t{1} << split_vars.size()) > ctx.caps.dnf_clauses)
    throw cap_error("zero-split branches", ctx.caps.dnf_clauses);

  std::vector<Formula> branches;
  std::ostringstream rules;
  for (std::size_t mask = 0; mask < (std::size_t{1} << split_vars.size());
       ++mask) {
    std::vector<Formula> guards;
    Formula matrix = body;
    bool var_zeroed = false;
    for (std::size_t i = 0; i < split_vars.size(); ++i) {
      const std::string &v = split_vars[i];
      bool zero = (mask >> i) & 1;
      if (v == var) {
        var_zeroed = zero;
        if (zero)
          matrix = substitute(matrix, v, t_zero());
        continue;
      }
      if (zero) {
        guards.push_back(f_eq(t_var(v), t_zero()));
        matrix = substitute(matrix, v, t_zero());
      } else {
        guards.push_back(f_not(f_eq(t_var(v), t_zero())));
      }
    }
    matrix = fold_constants(matrix, ctx.model);

    Formula piece;
    if (var_zeroed) {
      piece = matrix; // the witness is the zero element
    } else {
      // remaining variables are nonzero: split atoms and eliminate per clause
      Formula split = split_all_atoms(matrix, ctx.model.layering, ctx.caps);
      auto clauses = dnf_clauses(split, ctx.caps);
      std::vector<Formula> results(clauses.size());
      std::vector<std::string> rule(clauses.size());
      std::vector<std::exception_ptr> errs(clauses.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (ctx.exec.parallel && clauses.size() > 1)
#endif
      for (long ci = 0; ci < static_cast<long>(clauses.size()); ++ci) {
        try {
          results[ci] = eliminate_exists(var, clauses[ci], ctx.model.layering,
                                         ctx.caps, &rule[ci]);
        } catch (...) {
          errs[ci] = std::current_exception();
        }
      }
      for (const auto &e : errs)
        if (e)
          std::rethrow_exception(e);
      for (const auto &r : rule)
        if (!r.empty() && r != "ground-false")
          rules << " " << r;
      // deduplicate clause results; eliminations of ordering residues often
      // coincide
      std::vector<Formula> unique;
      std::set<std::string> seen;
      for (const auto &res : results) {
        if (res->kind == FormulaKind::False)
          continue;
        std::string key = pretty(res);
        if (seen.insert(std::move(key)).second)
          unique.push_back(res);
      }
      piece = split_to_surface(f_or_all(unique), ctx.model.layering.kind());
      piece = fold_constants(piece, ctx.model);
    }
    guards.push_back(piece);
    branches.push_back(f_and_all(guards));
  }
  Formula out = fold_constants(f_or_all(branches), ctx.model);
  ctx.trace.push_back("exists " + var + ":" +
                      (rules.str().empty() ? " zero-branches only"
                                           : rules.str()));
  return out;
}

Formula eliminate_all(const Formula &f, ElimContext &ctx) {
  switch (f->kind) {
  case FormulaKind::Exists: {
    Formula body = eliminate_all(f->f1, ctx);
    return eliminate_quantifier(f->var, body, ctx);
  }
  case FormulaKind::Forall: {
    Formula body = eliminate_all(f->f1, ctx);
    Formula inner = eliminate_quantifier(f->var, nnf(f_not(body)), ctx);
    ctx.trace.back() = "forall " + f->var + " (dualized):" +
                       ctx.trace.back().substr(ctx.trace.back().find(':') + 1);
    return fold_constants(f_not(inner), ctx.model);
  }
  case FormulaKind::Not:
    return f_not(eliminate_all(f->f1, ctx));
  case FormulaKind::And:
    return f_and(eliminate_all(f->f1, ctx), eliminate_all(f->f2, ctx));
  case FormulaKind::Or:
    return f_or(eliminate_all(f->f1, ctx), eliminate_all(f->f2, ctx));
  case FormulaKind::Implies:
    return f_implies(eliminate_all(f->f1, ctx), eliminate_all(f->f2, ctx));
  default:
    return f;
  }
}

} // namespace

QEReport qe(const Formula &f, const CanonicalModel &model, const Caps &caps,
            const ExecPolicy &exec) {
  if (quantifier_free(f))
    return QEReport{f, {}};
  ElimContext ctx{model, caps, exec, {}};
  Formula result =
      fold_constants(eliminate_all(rename_bound_apart(f), ctx), model);
  return QEReport{result, std::move(ctx.trace)};
}

} // namespace layered
