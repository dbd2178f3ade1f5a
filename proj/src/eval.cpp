// SPDX-License-Identifier: Apache-2.0
#include "layered/eval.hpp"

#include <sstream>

namespace layered {

static unsigned long small_exp(const Int &n) {
  if (n < 1 || n > 1000000)
    throw cap_error("exponent magnitude", 1000000);
  return n.convert_to<unsigned long>();
}

LayeredElem eval_term(const Term &t, const Assignment &sigma,
                      const CanonicalModel &model) {
  switch (t->kind) {
  case TermKind::Var: {
    auto it = sigma.find(t->name);
    if (it == sigma.end())
      throw eval_error("unbound variable " + t->name);
    return it->second;
  }
  case TermKind::Zero:
    return model.zero();
  case TermKind::One:
    return model.one();
  case TermKind::Lit:
    return t->lit;
  case TermKind::LayerConst:
    return LayeredElem{t->layer_const, Value::rat(0)};
  case TermKind::Add:
    return tadd(eval_term(t->a, sigma, model), eval_term(t->b, sigma, model));
  case TermKind::Mul:
    return tmul(eval_term(t->a, sigma, model), eval_term(t->b, sigma, model));
  case TermKind::Pow:
    return tpow(eval_term(t->a, sigma, model),
                static_cast<unsigned>(small_exp(t->exp)));
  case TermKind::P1:
    return proj1(eval_term(t->a, sigma, model));
  case TermKind::P2:
    return proj2(eval_term(t->a, sigma, model));
  }
  throw std::logic_error("bad term node");
}

bool eval_formula(const Formula &f, const Assignment &sigma,
                  const CanonicalModel &model) {
  switch (f->kind) {
  case FormulaKind::True:
    return true;
  case FormulaKind::False:
    return false;
  case FormulaKind::Cmp: {
    LayeredElem a = eval_term(f->t1, sigma, model);
    LayeredElem b = eval_term(f->t2, sigma, model);
    return f->rel == CmpRel::Eq ? a == b : lt(a, b);
  }
  case FormulaKind::Not:
    return !eval_formula(f->f1, sigma, model);
  case FormulaKind::And:
    return eval_formula(f->f1, sigma, model) &&
           eval_formula(f->f2, sigma, model);
  case FormulaKind::Or:
    return eval_formula(f->f1, sigma, model) ||
           eval_formula(f->f2, sigma, model);
  case FormulaKind::Implies:
    return !eval_formula(f->f1, sigma, model) ||
           eval_formula(f->f2, sigma, model);
  case FormulaKind::Exists:
  case FormulaKind::Forall:
    throw eval_error("cannot evaluate a quantified formula");
  case FormulaKind::Lin: {
    std::map<std::string, Rat> vals;
    for (const auto &[v, c] : f->lin.coeffs) {
      auto it = sigma.find(v);
      if (it == sigma.end())
        throw eval_error("unbound variable " + v);
      if (it->second.is_zero())
        throw eval_error("linear atom evaluated at the zero element");
      vals[v] = it->second.value.q;
    }
    return eval_lin(f->lin, vals);
  }
  case FormulaKind::Lay: {
    std::map<std::string, LayerElem> lays;
    auto collect = [&](const LayPoly &p) {
      for (const auto &v : lay_vars(p)) {
        auto it = sigma.find(v);
        if (it == sigma.end())
          throw eval_error("unbound variable " + v);
        lays[v] = it->second.layer;
      }
    };
    collect(f->lay.lhs);
    collect(f->lay.rhs);
    bool eq;
    if (f->lay.lhs.empty() && f->lay.rhs.empty())
      eq = true;
    else if (f->lay.lhs.empty() || f->lay.rhs.empty())
      eq = false;
    else
      eq = eval_lay(f->lay.lhs, lays) == eval_lay(f->lay.rhs, lays);
    return f->lay.neq ? !eq : eq;
  }
  }
  throw std::logic_error("bad formula node");
}

std::string assignment_to_string(const Assignment &sigma) {
  std::ostringstream os;
  bool first = true;
  for (const auto &[v, e] : sigma) {
    if (!first)
      os << ",";
    first = false;
    os << v << "=" << elem_to_string(e);
  }
  return os.str();
}

} // namespace layered
