// SPDX-License-Identifier: Apache-2.0
#include "layered/printer.hpp"

#include "layered/normal.hpp"

#include <sstream>

namespace layered {

namespace {

void print_term(std::ostream &os, const Term &t) {
  switch (t->kind) {
  case TermKind::Var:
    os << t->name;
    return;
  case TermKind::Zero:
    os << "0";
    return;
  case TermKind::One:
    os << "1";
    return;
  case TermKind::Lit:
    if (t->lit.is_zero())
      os << "0";
    else
      os << "[" << layer_to_string(t->lit.layer) << "]"
         << rat_to_string(t->lit.value.q);
    return;
  case TermKind::LayerConst:
    os << "L(" << layer_to_string(t->layer_const) << ")";
    return;
  case TermKind::Add:
  case TermKind::Mul:
    os << "(";
    print_term(os, t->a);
    os << (t->kind == TermKind::Add ? " + " : " * ");
    print_term(os, t->b);
    os << ")";
    return;
  case TermKind::Pow:
    // nested powers need parentheses to re-parse as a base
    if (t->a->kind == TermKind::Pow) {
      os << "(";
      print_term(os, t->a);
      os << ")";
    } else {
      print_term(os, t->a);
    }
    os << "^" << t->exp.str();
    return;
  case TermKind::P1:
  case TermKind::P2:
    os << (t->kind == TermKind::P1 ? "p1(" : "p2(");
    print_term(os, t->a);
    os << ")";
    return;
  }
}

bool self_delimiting(const Formula &f) {
  // everything except quantifiers prints either as a single token or inside
  // its own parentheses
  return f->kind != FormulaKind::Exists && f->kind != FormulaKind::Forall;
}

void print_formula(std::ostream &os, const Formula &f);

void print_child(std::ostream &os, const Formula &f) {
  if (self_delimiting(f)) {
    print_formula(os, f);
  } else {
    os << "(";
    print_formula(os, f);
    os << ")";
  }
}

void print_formula(std::ostream &os, const Formula &f) {
  switch (f->kind) {
  case FormulaKind::True:
    os << "true";
    return;
  case FormulaKind::False:
    os << "false";
    return;
  case FormulaKind::Cmp:
    os << "(";
    print_term(os, f->t1);
    os << (f->rel == CmpRel::Eq ? " = " : " < ");
    print_term(os, f->t2);
    os << ")";
    return;
  case FormulaKind::Not:
    os << "~";
    print_child(os, f->f1);
    return;
  case FormulaKind::And:
  case FormulaKind::Or:
  case FormulaKind::Implies: {
    const char *op = f->kind == FormulaKind::And     ? " & "
                     : f->kind == FormulaKind::Or    ? " | "
                                                     : " -> ";
    // implication operands are primaries: negations need parentheses there
    auto print_operand = [&](const Formula &g) {
      if (f->kind == FormulaKind::Implies && g->kind == FormulaKind::Not) {
        os << "(";
        print_formula(os, g);
        os << ")";
      } else {
        print_child(os, g);
      }
    };
    os << "(";
    print_operand(f->f1);
    os << op;
    print_operand(f->f2);
    os << ")";
    return;
  }
  case FormulaKind::Exists:
  case FormulaKind::Forall:
    os << (f->kind == FormulaKind::Exists ? "E " : "A ") << f->var << ". ";
    print_formula(os, f->f1);
    return;
  case FormulaKind::Lin:
    // not part of the surface grammar; print through the surface form
    print_formula(os, lin_to_surface(f->lin, LayerKind::Trivial));
    return;
  case FormulaKind::Lay:
    print_formula(os, lay_to_surface(f->lay));
    return;
  }
}

} // namespace

std::string pretty(const Term &t) {
  std::ostringstream os;
  print_term(os, t);
  return os.str();
}

std::string pretty(const Formula &f) {
  std::ostringstream os;
  print_formula(os, f);
  return os.str();
}

} // namespace layered
