// SPDX-License-Identifier: Apache-2.0
#include "layered/normal.hpp"

#include <algorithm>
#include <cassert>

namespace layered {

PolyNF to_poly(const Term &t, LayerKind kind) {
  switch (t->kind) {
  case TermKind::Var:
    return poly_var(kind, t->name);
  case TermKind::Zero:
    return poly_zero(kind);
  case TermKind::One:
    return poly_const(one_elem(LayerSemiring(kind)));
  case TermKind::Lit:
    if (t->lit.layer.kind != kind)
      throw std::logic_error("literal from a different layering semiring");
    return poly_const(t->lit);
  case TermKind::LayerConst:
    if (t->layer_const.kind != kind)
      throw std::logic_error("layer constant from a different semiring");
    return poly_const(LayeredElem{t->layer_const, Value::rat(0)});
  case TermKind::Add:
    return poly_add(to_poly(t->a, kind), to_poly(t->b, kind));
  case TermKind::Mul:
    return poly_mul(to_poly(t->a, kind), to_poly(t->b, kind));
  case TermKind::Pow:
    return poly_pow(to_poly(t->a, kind), t->exp);
  case TermKind::P1: {
    PolyNF p = to_poly(t->a, kind);
    if (p.is_zero())
      return p; // pi1(0) = 0
    if (p.monomials.size() > 1)
      throw std::invalid_argument("projection of a sum");
    const Monomial &m = p.monomials.front();
    return PolyNF{kind, {Monomial{m.p1_exps, {}, LayerElem{kind, 1}, m.value}}};
  }
  case TermKind::P2: {
    PolyNF p = to_poly(t->a, kind);
    if (p.is_zero())
      return poly_const(one_elem(LayerSemiring(kind))); // pi2(0) = 1
    if (p.monomials.size() > 1)
      throw std::invalid_argument("projection of a sum");
    const Monomial &m = p.monomials.front();
    return PolyNF{kind, {Monomial{{}, m.p2_exps, m.layer, 0}}};
  }
  }
  throw std::logic_error("bad term node");
}

std::vector<MonomialOrdering> enumerate_mtos(const PolyNF &p,
                                             const Caps &caps) {
  std::size_t n = p.monomials.size();
  if (n > caps.monomials)
    throw cap_error("monomial count", caps.monomials);
  std::vector<MonomialOrdering> out;
  if (n == 0)
    return out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    MonomialOrdering o;
    for (std::size_t i = 0; i < n; ++i)
      ((mask >> i) & 1 ? o.dominant : o.dominated).push_back(i);
    out.push_back(std::move(o));
  }
  return out;
}

LinAtom lin_from_monomials(const Monomial &a, const Monomial &b, LinRel rel) {
  LinAtom atom;
  atom.rel = rel;
  for (const auto &[v, e] : a.p1_exps)
    atom.coeffs[v] += e;
  for (const auto &[v, e] : b.p1_exps) {
    Int &slot = atom.coeffs[v];
    slot -= e;
    if (slot == 0)
      atom.coeffs.erase(v);
  }
  atom.constant = b.value - a.value;
  return lin_canonical(std::move(atom));
}

std::vector<LinAtom> delta_condition_atoms(const PolyNF &p,
                                           const MonomialOrdering &o) {
  std::vector<LinAtom> atoms;
  const auto &I = o.dominant;
  for (std::size_t k = 1; k < I.size(); ++k)
    atoms.push_back(lin_from_monomials(p.monomials[I[k - 1]],
                                       p.monomials[I[k]], LinRel::Eq));
  std::size_t rep = I.front();
  for (std::size_t j : o.dominated)
    atoms.push_back(
        lin_from_monomials(p.monomials[j], p.monomials[rep], LinRel::Lt));
  return atoms;
}

Formula f_lin_folded(LinAtom a) {
  a = lin_canonical(std::move(a));
  if (a.is_ground())
    return lin_ground_truth(a) ? f_true() : f_false();
  return f_lin(std::move(a));
}

Formula delta_condition(const PolyNF &p, const MonomialOrdering &o) {
  std::vector<Formula> parts;
  for (auto &a : delta_condition_atoms(p, o))
    parts.push_back(f_lin_folded(std::move(a)));
  Formula out = f_and_all(parts);
  // fold embedded constants
  for (const auto &part : parts)
    if (part->kind == FormulaKind::False)
      return f_false();
  return out;
}

PolyNF essential_form(const PolyNF &p, const Caps &caps) {
  if (p.monomials.size() > caps.monomials)
    throw cap_error("monomial count", caps.monomials);
  PolyNF out{p.kind, {}};
  for (std::size_t i = 0; i < p.monomials.size(); ++i) {
    // i is essential iff some assignment puts it in the tied dominant set,
    // i.e. the weak system "m_i >= m_j for all j" is feasible over Q
    LinSystem sys;
    bool ok = true;
    for (std::size_t j = 0; j < p.monomials.size() && ok; ++j) {
      if (j == i)
        continue;
      ok = lin_add_atom(
          sys, lin_from_monomials(p.monomials[j], p.monomials[i], LinRel::Le));
    }
    if (ok && lin_feasible(sys))
      out.monomials.push_back(p.monomials[i]);
  }
  return out;
}

Formula negate_lin(const LinAtom &a) {
  LinAtom flip;
  flip.rel = LinRel::Lt;
  for (const auto &[v, c] : a.coeffs)
    flip.coeffs[v] = -c;
  flip.constant = -a.constant;
  if (a.rel == LinRel::Eq) {
    LinAtom less = a;
    less.rel = LinRel::Lt;
    return f_or(f_lin_folded(std::move(less)), f_lin_folded(std::move(flip)));
  }
  assert(a.rel == LinRel::Lt);
  LinAtom eq = a;
  eq.rel = LinRel::Eq;
  return f_or(f_lin_folded(std::move(eq)), f_lin_folded(std::move(flip)));
}

// ---------------------------------------------------------------------------
// layer atoms

static bool lay_ground(const LayPoly &p) { return lay_vars(p).empty(); }

// strips the joint monomial gcd of both sides (multiplicative cancellation)
static void lay_strip_gcd(LayPoly &a, LayPoly &b) {
  if (a.empty() || b.empty())
    return;
  std::map<std::string, Int> gcd;
  bool first = true;
  auto fold = [&](const LayPoly &p) {
    for (const auto &m : p.monomials) {
      if (first) {
        gcd = m.exps;
        first = false;
        continue;
      }
      for (auto it = gcd.begin(); it != gcd.end();) {
        auto jt = m.exps.find(it->first);
        if (jt == m.exps.end()) {
          it = gcd.erase(it);
        } else {
          it->second = std::min(it->second, jt->second);
          ++it;
        }
      }
    }
  };
  fold(a);
  fold(b);
  if (gcd.empty())
    return;
  auto strip = [&](LayPoly &p) {
    for (auto &m : p.monomials)
      for (const auto &[v, e] : gcd) {
        auto it = m.exps.find(v);
        it->second -= e;
        if (it->second == 0)
          m.exps.erase(it);
      }
    p = lay_canonical(std::move(p));
  };
  strip(a);
  strip(b);
}

Formula make_lay_atom(LayPoly lhs, LayPoly rhs, bool neq) {
  lhs = lay_canonical(std::move(lhs));
  rhs = lay_canonical(std::move(rhs));
  auto constant = [&](bool eq) {
    return (eq != neq) ? f_true() : f_false();
  };
  if (lhs.kind == LayerKind::Trivial) {
    // every nonempty layer poly evaluates to 1
    return constant(lhs.empty() == rhs.empty());
  }
  lay_strip_gcd(lhs, rhs);
  lay_cancel(lhs, rhs);
  if (lhs.empty() || rhs.empty())
    return constant(lhs.empty() && rhs.empty()); // positivity
  if (lhs == rhs)
    return constant(true);
  if (lay_ground(lhs) && lay_ground(rhs))
    return constant(eval_lay(lhs, {}) == eval_lay(rhs, {}));
  return f_lay(LayAtom{std::move(lhs), std::move(rhs), neq});
}

// ---------------------------------------------------------------------------
// monomials back to terms

Term mono_to_term(const Monomial &m) {
  LayeredElem coeff = make_elem(m.layer, Value::rat(m.value));
  Term t;
  auto mul_in = [&](Term factor) { t = t ? t_mul(t, factor) : factor; };
  for (const auto &[v, e] : m.p1_exps) {
    Term f = t_p1(t_var(v));
    mul_in(e == 1 ? f : t_pow(f, e));
  }
  for (const auto &[v, e] : m.p2_exps) {
    Term f = t_p2(t_var(v));
    mul_in(e == 1 ? f : t_pow(f, e));
  }
  bool coeff_is_one = !coeff.is_zero() && coeff.value.q == 0 &&
                      coeff.layer == LayerElem{coeff.layer.kind, 1};
  if (!t || !coeff_is_one)
    mul_in(t_lit(coeff)); // mul_in keeps order: variables first
  return t;
}

// ---------------------------------------------------------------------------
// atomic splitting

namespace {

// innermost projection node whose operand is a genuine sum
Term find_blocked(const Term &t, LayerKind kind) {
  if (!t)
    return nullptr;
  if (Term b = find_blocked(t->a, kind))
    return b;
  if (Term b = find_blocked(t->b, kind))
    return b;
  if (t->kind == TermKind::P1 || t->kind == TermKind::P2) {
    try {
      (void)to_poly(t, kind);
    } catch (const std::invalid_argument &) {
      return t;
    }
  }
  return nullptr;
}

Term replace_node(const Term &t, const Term &target, const Term &repl) {
  if (!t)
    return t;
  if (t == target)
    return repl;
  switch (t->kind) {
  case TermKind::Add:
    return t_add(replace_node(t->a, target, repl),
                 replace_node(t->b, target, repl));
  case TermKind::Mul:
    return t_mul(replace_node(t->a, target, repl),
                 replace_node(t->b, target, repl));
  case TermKind::Pow:
    return t_pow(replace_node(t->a, target, repl), t->exp);
  case TermKind::P1:
    return t_p1(replace_node(t->a, target, repl));
  case TermKind::P2:
    return t_p2(replace_node(t->a, target, repl));
  default:
    return t;
  }
}

Formula split_core(CmpRel rel, const PolyNF &p, const PolyNF &q,
                   const Caps &caps) {
  if (p.is_zero() && q.is_zero())
    return rel == CmpRel::Eq ? f_true() : f_false();
  // variables avoid zero here, so a nonempty side has a rational value
  if (p.is_zero())
    return rel == CmpRel::Eq ? f_false() : f_true(); // 0 < t
  if (q.is_zero())
    return f_false(); // t = 0 and t < 0 both fail
  auto mtos_p = enumerate_mtos(p, caps);
  auto mtos_q = enumerate_mtos(q, caps);
  // keep only orderings with feasible conditions
  auto feasible_of = [](const PolyNF &poly,
                        std::vector<MonomialOrdering> &mtos) {
    std::vector<std::pair<MonomialOrdering, std::vector<LinAtom>>> out;
    for (auto &o : mtos) {
      auto atoms = delta_condition_atoms(poly, o);
      LinSystem sys;
      bool ok = true;
      for (const auto &a : atoms)
        if (!lin_add_atom(sys, a)) {
          ok = false;
          break;
        }
      if (ok && lin_feasible(sys))
        out.emplace_back(std::move(o), std::move(atoms));
    }
    return out;
  };
  auto fp = feasible_of(p, mtos_p);
  auto fq = feasible_of(q, mtos_q);

  std::vector<Formula> conjuncts;
  for (const auto &[op, atoms_p] : fp)
    for (const auto &[oq, atoms_q] : fq) {
      LinSystem joint;
      bool ok = true;
      for (const auto &a : atoms_p)
        if (!lin_add_atom(joint, a)) {
          ok = false;
          break;
        }
      if (ok)
        for (const auto &a : atoms_q)
          if (!lin_add_atom(joint, a)) {
            ok = false;
            break;
          }
      if (!ok || !lin_feasible(joint))
        continue; // vacuous implication

      const Monomial &rp = p.monomials[op.dominant.front()];
      const Monomial &rq = q.monomials[oq.dominant.front()];
      Formula consequent;
      if (rel == CmpRel::Eq) {
        Formula values = f_lin_folded(lin_from_monomials(rp, rq, LinRel::Eq));
        LayPoly lp{p.kind, {}}, lq{q.kind, {}};
        for (std::size_t i : op.dominant)
          lp = lay_add(lp, lay_of_monomial(p.monomials[i]));
        for (std::size_t i : oq.dominant)
          lq = lay_add(lq, lay_of_monomial(q.monomials[i]));
        Formula layers = make_lay_atom(std::move(lp), std::move(lq), false);
        consequent = f_and(values, layers);
      } else {
        consequent = f_lin_folded(lin_from_monomials(rp, rq, LinRel::Lt));
      }
      // Delta_p /\ Delta_q -> C, as ~Delta \/ C
      std::vector<Formula> parts;
      for (const auto &a : atoms_p)
        parts.push_back(negate_lin(a));
      for (const auto &a : atoms_q)
        parts.push_back(negate_lin(a));
      parts.push_back(consequent);
      conjuncts.push_back(f_or_all(parts));
    }
  return f_and_all(conjuncts);
}

} // namespace

static Formula split_atom_impl(CmpRel rel, const Term &lhs, const Term &rhs,
                               const LayerSemiring &sr, const Caps &caps,
                               std::size_t &budget) {
  if (budget == 0)
    throw cap_error("atomic split expansion", caps.dnf_clauses);
  --budget;
  LayerKind kind = sr.kind();
  Term blocked = find_blocked(lhs, kind);
  if (!blocked)
    blocked = find_blocked(rhs, kind);
  if (!blocked) {
    return split_core(rel, to_poly(lhs, kind), to_poly(rhs, kind), caps);
  }
  // remove the innermost projection-of-a-sum by an exact ordering case
  // split: under each ordering's condition the projection collapses to a
  // projection of a single monomial (pi1) or a sum over the dominant set
  // (pi2); conditions partition the assignments, so the disjunction is exact
  PolyNF pu = to_poly(blocked->a, kind);
  bool is_p1 = blocked->kind == TermKind::P1;
  if (pu.is_zero()) {
    Term repl = is_p1 ? t_zero() : t_one();
    return split_atom_impl(rel, replace_node(lhs, blocked, repl),
                           replace_node(rhs, blocked, repl), sr, caps, budget);
  }
  auto mtos = enumerate_mtos(pu, caps);
  std::vector<Formula> pieces;
  for (const auto &o : mtos) {
    std::vector<Formula> guard;
    const auto &I = o.dominant;
    Term rep_p1 = t_p1(mono_to_term(pu.monomials[I.front()]));
    for (std::size_t k = 1; k < I.size(); ++k)
      guard.push_back(split_atom_impl(
          CmpRel::Eq, t_p1(mono_to_term(pu.monomials[I[k - 1]])),
          t_p1(mono_to_term(pu.monomials[I[k]])), sr, caps, budget));
    for (std::size_t j : o.dominated)
      guard.push_back(split_atom_impl(CmpRel::Lt,
                                      t_p1(mono_to_term(pu.monomials[j])),
                                      rep_p1, sr, caps, budget));
    Term repl;
    if (is_p1) {
      repl = rep_p1;
    } else {
      for (std::size_t i : I) {
        Term piece = t_p2(mono_to_term(pu.monomials[i]));
        repl = repl ? t_add(repl, piece) : piece;
      }
    }
    Formula inner =
        split_atom_impl(rel, replace_node(lhs, blocked, repl),
                        replace_node(rhs, blocked, repl), sr, caps, budget);
    pieces.push_back(f_and_all({f_and_all(guard), inner}));
  }
  return f_or_all(pieces);
}

Formula split_atom(CmpRel rel, const Term &lhs, const Term &rhs,
                   const LayerSemiring &sr, const Caps &caps) {
  std::size_t budget = caps.dnf_clauses;
  return split_atom_impl(rel, lhs, rhs, sr, caps, budget);
}

Formula split_all_atoms(const Formula &f, const LayerSemiring &sr,
                        const Caps &caps) {
  switch (f->kind) {
  case FormulaKind::True:
  case FormulaKind::False:
  case FormulaKind::Lin:
  case FormulaKind::Lay:
    return f;
  case FormulaKind::Cmp:
    return split_atom(f->rel, f->t1, f->t2, sr, caps);
  case FormulaKind::Not:
    return f_not(split_all_atoms(f->f1, sr, caps));
  case FormulaKind::And:
    return f_and(split_all_atoms(f->f1, sr, caps),
                 split_all_atoms(f->f2, sr, caps));
  case FormulaKind::Or:
    return f_or(split_all_atoms(f->f1, sr, caps),
                split_all_atoms(f->f2, sr, caps));
  case FormulaKind::Implies:
    return f_implies(split_all_atoms(f->f1, sr, caps),
                     split_all_atoms(f->f2, sr, caps));
  case FormulaKind::Exists:
  case FormulaKind::Forall:
    throw std::logic_error("split_all_atoms on quantified formula");
  }
  throw std::logic_error("bad formula node");
}

// ---------------------------------------------------------------------------
// negation normal form / DNF

static Formula nnf_pos(const Formula &f);
static Formula nnf_neg(const Formula &f);

static Formula nnf_pos(const Formula &f) {
  switch (f->kind) {
  case FormulaKind::True:
  case FormulaKind::False:
  case FormulaKind::Cmp:
  case FormulaKind::Lin:
  case FormulaKind::Lay:
    return f;
  case FormulaKind::Not:
    return nnf_neg(f->f1);
  case FormulaKind::And:
    return f_and(nnf_pos(f->f1), nnf_pos(f->f2));
  case FormulaKind::Or:
    return f_or(nnf_pos(f->f1), nnf_pos(f->f2));
  case FormulaKind::Implies:
    return f_or(nnf_neg(f->f1), nnf_pos(f->f2));
  case FormulaKind::Exists:
    return f_exists(f->var, nnf_pos(f->f1));
  case FormulaKind::Forall:
    return f_forall(f->var, nnf_pos(f->f1));
  }
  throw std::logic_error("bad formula node");
}

static Formula nnf_neg(const Formula &f) {
  switch (f->kind) {
  case FormulaKind::True:
    return f_false();
  case FormulaKind::False:
    return f_true();
  case FormulaKind::Cmp:
    return f_not(f); // surface literal; resolution happens after splitting
  case FormulaKind::Lin:
    return negate_lin(f->lin);
  case FormulaKind::Lay: {
    LayAtom a = f->lay;
    a.neq = !a.neq;
    return f_lay(std::move(a));
  }
  case FormulaKind::Not:
    return nnf_pos(f->f1);
  case FormulaKind::And:
    return f_or(nnf_neg(f->f1), nnf_neg(f->f2));
  case FormulaKind::Or:
    return f_and(nnf_neg(f->f1), nnf_neg(f->f2));
  case FormulaKind::Implies:
    return f_and(nnf_pos(f->f1), nnf_neg(f->f2));
  case FormulaKind::Exists:
    return f_forall(f->var, nnf_neg(f->f1));
  case FormulaKind::Forall:
    return f_exists(f->var, nnf_neg(f->f1));
  }
  throw std::logic_error("bad formula node");
}

Formula nnf(const Formula &f) { return nnf_pos(f); }

static bool literal_eq(const Formula &a, const Formula &b) {
  return formula_eq(a, b);
}

// complementary layer literals: same polynomials, opposite polarity
static bool lay_complement(const Formula &a, const Formula &b) {
  return a->kind == FormulaKind::Lay && b->kind == FormulaKind::Lay &&
         a->lay.lhs == b->lay.lhs && a->lay.rhs == b->lay.rhs &&
         a->lay.neq != b->lay.neq;
}

// clauses whose linear part is infeasible are dropped during distribution;
// ordering-condition residues make most cross products contradictory, so
// this keeps the clause count near the live one
static bool clause_lin_feasible(const std::vector<Formula> &clause) {
  LinSystem sys;
  for (const auto &lit : clause)
    if (lit->kind == FormulaKind::Lin && !lin_add_atom(sys, lit->lin))
      return false;
  if (sys.atoms.empty())
    return true;
  return lin_feasible(sys);
}

static void clauses_of(const Formula &f,
                       std::vector<std::vector<Formula>> &out,
                       const Caps &caps) {
  switch (f->kind) {
  case FormulaKind::True:
    out.push_back({});
    return;
  case FormulaKind::False:
    return;
  case FormulaKind::Cmp:
  case FormulaKind::Lin:
  case FormulaKind::Lay:
  case FormulaKind::Not:
    out.push_back({f});
    return;
  case FormulaKind::Or: {
    clauses_of(f->f1, out, caps);
    clauses_of(f->f2, out, caps);
    if (out.size() > caps.dnf_clauses)
      throw cap_error("DNF clause count", caps.dnf_clauses);
    return;
  }
  case FormulaKind::And: {
    std::vector<std::vector<Formula>> left, right;
    clauses_of(f->f1, left, caps);
    clauses_of(f->f2, right, caps);
    if (left.size() * right.size() > caps.dnf_clauses)
      throw cap_error("DNF clause count", caps.dnf_clauses);
    for (const auto &l : left)
      for (const auto &r : right) {
        std::vector<Formula> clause = l;
        bool contradictory = false;
        for (const auto &lit : r) {
          bool dup = false;
          for (const auto &have : clause) {
            if (literal_eq(have, lit)) {
              dup = true;
              break;
            }
            if (lay_complement(have, lit)) {
              contradictory = true;
              break;
            }
          }
          if (contradictory)
            break;
          if (!dup)
            clause.push_back(lit);
        }
        if (!contradictory && clause_lin_feasible(clause))
          out.push_back(std::move(clause));
        if (out.size() > caps.dnf_clauses)
          throw cap_error("DNF clause count", caps.dnf_clauses);
      }
    return;
  }
  default:
    throw std::logic_error("dnf over non-NNF or quantified formula");
  }
}

std::vector<std::vector<Formula>> dnf_clauses(const Formula &f,
                                              const Caps &caps) {
  std::vector<std::vector<Formula>> out;
  clauses_of(nnf(f), out, caps);
  return out;
}

Formula dnf(const Formula &f, const Caps &caps) {
  auto clauses = dnf_clauses(f, caps);
  std::vector<Formula> parts;
  parts.reserve(clauses.size());
  for (const auto &c : clauses)
    parts.push_back(f_and_all(c));
  return f_or_all(parts);
}

// ---------------------------------------------------------------------------
// folding and surface conversion

static Term ground_to_term(const LayeredElem &e, const CanonicalModel &model) {
  if (e.is_zero())
    return t_zero();
  if (e == model.one())
    return t_one();
  return t_lit(e);
}

// exact algebraic folding: ground subterms evaluate, zero absorbs in
// products and is neutral in sums, the unit is neutral in products
Term fold_term(const Term &t, const CanonicalModel &model) {
  switch (t->kind) {
  case TermKind::Var:
  case TermKind::Zero:
  case TermKind::One:
  case TermKind::LayerConst:
    return t;
  case TermKind::Lit:
    return ground_to_term(t->lit, model);
  case TermKind::Add: {
    Term a = fold_term(t->a, model);
    Term b = fold_term(t->b, model);
    if (a->kind == TermKind::Zero)
      return b;
    if (b->kind == TermKind::Zero)
      return a;
    if (term_vars(a).empty() && term_vars(b).empty())
      return ground_to_term(eval_term(t_add(a, b), {}, model), model);
    return t_add(a, b);
  }
  case TermKind::Mul: {
    Term a = fold_term(t->a, model);
    Term b = fold_term(t->b, model);
    if (a->kind == TermKind::Zero || b->kind == TermKind::Zero)
      return t_zero();
    if (a->kind == TermKind::One)
      return b;
    if (b->kind == TermKind::One)
      return a;
    if (term_vars(a).empty() && term_vars(b).empty())
      return ground_to_term(eval_term(t_mul(a, b), {}, model), model);
    return t_mul(a, b);
  }
  case TermKind::Pow: {
    Term a = fold_term(t->a, model);
    if (a->kind == TermKind::Zero || a->kind == TermKind::One)
      return a;
    if (term_vars(a).empty())
      return ground_to_term(eval_term(t_pow(a, t->exp), {}, model), model);
    return t_pow(a, t->exp);
  }
  case TermKind::P1:
  case TermKind::P2: {
    Term a = fold_term(t->a, model);
    if (term_vars(a).empty()) {
      Term whole = t->kind == TermKind::P1 ? t_p1(a) : t_p2(a);
      return ground_to_term(eval_term(whole, {}, model), model);
    }
    return t->kind == TermKind::P1 ? t_p1(a) : t_p2(a);
  }
  }
  throw std::logic_error("bad term node");
}

Formula fold_constants(const Formula &f, const CanonicalModel &model) {
  switch (f->kind) {
  case FormulaKind::True:
  case FormulaKind::False:
    return f;
  case FormulaKind::Cmp: {
    Term a = fold_term(f->t1, model);
    Term b = fold_term(f->t2, model);
    if (term_eq(a, b))
      return f->rel == CmpRel::Eq ? f_true() : f_false();
    if (f->rel == CmpRel::Lt && b->kind == TermKind::Zero)
      return f_false(); // nothing is below the zero element
    if (term_vars(a).empty() && term_vars(b).empty())
      return eval_formula(f_cmp(f->rel, a, b), {}, model) ? f_true()
                                                          : f_false();
    return f_cmp(f->rel, a, b);
  }
  case FormulaKind::Lin:
    return f_lin_folded(f->lin);
  case FormulaKind::Lay:
    return make_lay_atom(f->lay.lhs, f->lay.rhs, f->lay.neq);
  case FormulaKind::Not: {
    Formula a = fold_constants(f->f1, model);
    if (a->kind == FormulaKind::True)
      return f_false();
    if (a->kind == FormulaKind::False)
      return f_true();
    if (a->kind == FormulaKind::Not)
      return a->f1;
    return f_not(a);
  }
  case FormulaKind::And: {
    Formula a = fold_constants(f->f1, model);
    Formula b = fold_constants(f->f2, model);
    if (a->kind == FormulaKind::False || b->kind == FormulaKind::False)
      return f_false();
    if (a->kind == FormulaKind::True)
      return b;
    if (b->kind == FormulaKind::True)
      return a;
    return f_and(a, b);
  }
  case FormulaKind::Or: {
    Formula a = fold_constants(f->f1, model);
    Formula b = fold_constants(f->f2, model);
    if (a->kind == FormulaKind::True || b->kind == FormulaKind::True)
      return f_true();
    if (a->kind == FormulaKind::False)
      return b;
    if (b->kind == FormulaKind::False)
      return a;
    return f_or(a, b);
  }
  case FormulaKind::Implies: {
    Formula a = fold_constants(f->f1, model);
    Formula b = fold_constants(f->f2, model);
    if (a->kind == FormulaKind::False || b->kind == FormulaKind::True)
      return f_true();
    if (a->kind == FormulaKind::True)
      return b;
    if (b->kind == FormulaKind::False)
      return f_not(a);
    return f_implies(a, b);
  }
  case FormulaKind::Exists:
  case FormulaKind::Forall: {
    Formula body = fold_constants(f->f1, model);
    if (body->kind == FormulaKind::True || body->kind == FormulaKind::False)
      return body; // the domain is nonempty
    return f->kind == FormulaKind::Exists ? f_exists(f->var, body)
                                          : f_forall(f->var, body);
  }
  }
  throw std::logic_error("bad formula node");
}

Formula lin_to_surface(const LinAtom &a, LayerKind kind) {
  assert(a.rel != LinRel::Le);
  Term lhs, rhs;
  auto mul_in = [](Term &t, Term factor) {
    t = t ? t_mul(t, factor) : factor;
  };
  for (const auto &[v, n] : a.coeffs) {
    Term base = t_p1(t_var(v));
    if (n > 0)
      mul_in(lhs, n == 1 ? base : t_pow(base, n));
    else
      mul_in(rhs, n == -1 ? base : t_pow(base, -n));
  }
  if (a.constant != 0)
    mul_in(rhs,
           t_lit(LayeredElem{LayerElem{kind, 1}, Value::rat(a.constant)}));
  if (!lhs)
    lhs = t_one();
  if (!rhs)
    rhs = t_one();
  return f_cmp(a.rel == LinRel::Eq ? CmpRel::Eq : CmpRel::Lt, lhs, rhs);
}

static Term lay_poly_to_term(const LayPoly &p) {
  assert(!p.empty());
  Term sum;
  for (const auto &m : p.monomials) {
    Term t;
    auto mul_in = [&](Term factor) { t = t ? t_mul(t, factor) : factor; };
    for (const auto &[v, e] : m.exps) {
      Term base = t_p2(t_var(v));
      mul_in(e == 1 ? base : t_pow(base, e));
    }
    if (!t || !(m.coeff == LayerElem{m.coeff.kind, 1}))
      mul_in(t_layer_const(m.coeff));
    sum = sum ? t_add(sum, t) : t;
  }
  return sum;
}

Formula lay_to_surface(const LayAtom &a) {
  Formula eq = f_eq(lay_poly_to_term(a.lhs), lay_poly_to_term(a.rhs));
  return a.neq ? f_not(eq) : eq;
}

Formula split_to_surface(const Formula &f, LayerKind kind) {
  switch (f->kind) {
  case FormulaKind::Lin:
    return lin_to_surface(f->lin, kind);
  case FormulaKind::Lay:
    return lay_to_surface(f->lay);
  case FormulaKind::Not:
    return f_not(split_to_surface(f->f1, kind));
  case FormulaKind::And:
    return f_and(split_to_surface(f->f1, kind), split_to_surface(f->f2, kind));
  case FormulaKind::Or:
    return f_or(split_to_surface(f->f1, kind), split_to_surface(f->f2, kind));
  case FormulaKind::Implies:
    return f_implies(split_to_surface(f->f1, kind),
                     split_to_surface(f->f2, kind));
  case FormulaKind::Exists:
    return f_exists(f->var, split_to_surface(f->f1, kind));
  case FormulaKind::Forall:
    return f_forall(f->var, split_to_surface(f->f1, kind));
  default:
    return f;
  }
}

} // namespace layered
