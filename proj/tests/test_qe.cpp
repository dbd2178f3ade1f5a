// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "layered/decide.hpp"
#include "layered/parser.hpp"
#include "layered/printer.hpp"

#include "gen.hpp"

using namespace layered;

namespace {

const LayerSemiring kNat = LayerSemiring::naturals();
const LayerSemiring kTrivial = LayerSemiring::trivial();
const LayerSemiring kPosRat = LayerSemiring::positive_rationals();

Formula fo(const std::string &text, const LayerSemiring &sr = kNat) {
  return parse_formula(text, sr);
}

LinAtom lin(std::map<std::string, Int> coeffs, Rat c, LinRel rel) {
  return lin_canonical(LinAtom{std::move(coeffs), std::move(c), rel});
}

// grid of rational witnesses with bounded denominators, the independent
// decision oracle for single-variable strict/equality clauses
bool grid_satisfiable(const std::vector<LinAtom> &atoms, int box, int max_den) {
  for (int den = 1; den <= max_den; ++den)
    for (int num = -box * den; num <= box * den; ++num) {
      std::map<std::string, Rat> val{{"w", Rat(num, den)}};
      bool ok = true;
      for (const auto &a : atoms)
        if (!eval_lin(a, val)) {
          ok = false;
          break;
        }
      if (ok)
        return true;
    }
  return false;
}

} // namespace

TEST_CASE("zero_case_split: documented cases") {
  CanonicalModel m{kNat};
  auto [z1, n1] = zero_case_split("w", fo("w * x = 0"), m);
  CHECK(z1->kind == FormulaKind::True);
  CHECK(formula_eq(n1, f_eq(t_var("x"), t_zero())));

  auto [z2, n2] = zero_case_split("w", fo("w = 1"), m);
  CHECK(z2->kind == FormulaKind::False);

  auto [z3, n3] = zero_case_split("w", fo("w < w"), m);
  CHECK(z3->kind == FormulaKind::False);
  CHECK(n3->kind == FormulaKind::False);
}

TEST_CASE("eliminate_exists: density gives the cross condition") {
  // a < w and w < b
  std::vector<Formula> clause = {
      f_lin(lin({{"a", 1}, {"w", -1}}, 0, LinRel::Lt)),
      f_lin(lin({{"w", 1}, {"b", -1}}, 0, LinRel::Lt))};
  Formula out = eliminate_exists("w", clause, kNat);
  REQUIRE(out->kind == FormulaKind::Lin);
  CHECK(out->lin == lin({{"a", 1}, {"b", -1}}, 0, LinRel::Lt));
}

TEST_CASE("eliminate_exists: equations always solvable by divisibility") {
  std::vector<Formula> clause = {
      f_lin(lin({{"w", 2}, {"g", -1}}, 0, LinRel::Eq))};
  CHECK(eliminate_exists("w", clause, kNat)->kind == FormulaKind::True);
  // one-sided bounds never constrain the dense unbounded order
  std::vector<Formula> bounds = {
      f_lin(lin({{"w", 3}}, Rat(5), LinRel::Lt)),
      f_lin(lin({{"w", 1}}, Rat(-2), LinRel::Lt))};
  CHECK(eliminate_exists("w", bounds, kNat)->kind == FormulaKind::True);
}

TEST_CASE("eliminate_exists: ground layer systems") {
  // pi2(w)^2 = 4 over N
  LayPoly wsq{LayerKind::Nat,
              {LayMonomial{{{"w", 2}}, LayerElem{LayerKind::Nat, 1}}}};
  LayPoly four{LayerKind::Nat, {LayMonomial{{}, LayerElem{LayerKind::Nat, 4}}}};
  std::vector<Formula> clause = {f_lay(LayAtom{wsq, four, false})};
  CHECK(eliminate_exists("w", clause, kNat)->kind == FormulaKind::True);
  // pi2(w)^2 = 3 has no natural witness
  LayPoly three{LayerKind::Nat,
                {LayMonomial{{}, LayerElem{LayerKind::Nat, 3}}}};
  std::vector<Formula> clause2 = {f_lay(LayAtom{wsq, three, false})};
  CHECK(eliminate_exists("w", clause2, kNat)->kind == FormulaKind::False);
}

TEST_CASE("eliminate_exists: substitution consumes layer equations") {
  // pi2(w) = pi2(x) and pi2(w) != pi2(y)  ->  pi2(x) != pi2(y)
  auto var = [](const char *v) {
    return LayPoly{LayerKind::Nat,
                   {LayMonomial{{{v, 1}}, LayerElem{LayerKind::Nat, 1}}}};
  };
  std::vector<Formula> clause = {f_lay(LayAtom{var("w"), var("x"), false}),
                                 f_lay(LayAtom{var("w"), var("y"), true})};
  Formula out = eliminate_exists("w", clause, kNat);
  REQUIRE(out->kind == FormulaKind::Lay);
  CHECK(out->lay.neq);
  CHECK(lay_vars(out->lay.lhs).count("x") + lay_vars(out->lay.rhs).count("x") ==
        1);
}

TEST_CASE("eliminate_exists: honest unsupported boundary") {
  auto var_pow = [](const char *v, int e) {
    return LayPoly{LayerKind::Nat,
                   {LayMonomial{{{v, e}}, LayerElem{LayerKind::Nat, 1}}}};
  };
  // pi2(w)^2 = pi2(x): parametric square, outside the fragment
  std::vector<Formula> clause = {
      f_lay(LayAtom{var_pow("w", 2), var_pow("x", 1), false})};
  CHECK_THROWS_AS(eliminate_exists("w", clause, kNat), unsupported_error);
}

TEST_CASE("eliminate_exists agrees with the grid oracle") {
  auto rng = rng_stream(4096, 0);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> natoms(1, 6);
  std::uniform_int_distribution<int> relpick(0, 3);
  int sat = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<LinAtom> atoms;
    std::vector<Formula> clause;
    int n = natoms(rng);
    for (int i = 0; i < n; ++i) {
      int m = coeff(rng);
      while (m == 0)
        m = coeff(rng);
      LinRel rel = relpick(rng) == 0 ? LinRel::Eq : LinRel::Lt;
      LinAtom a = lin({{"w", m}}, Rat(coeff(rng)), rel);
      atoms.push_back(a);
      clause.push_back(f_lin(a));
    }
    Formula out = eliminate_exists("w", clause, kNat);
    REQUIRE((out->kind == FormulaKind::True ||
             out->kind == FormulaKind::False));
    bool expected = grid_satisfiable(atoms, 5, 24);
    CHECK(out->kind ==
          (expected ? FormulaKind::True : FormulaKind::False));
    sat += expected;
  }
  CHECK(sat > 0);
  CHECK(sat < 300);
}

TEST_CASE("qe: density example") {
  CanonicalModel m{kNat};
  Formula f = fo("E w. (x < w & w < y)");
  QEReport r = qe(f, m);
  CHECK(quantifier_free(r.result));
  CHECK(!all_vars(r.result).count("w"));
  CHECK(!r.trace.empty());
  // semantically x < y, including at the zero element
  Sampler s{m};
  auto rng = rng_stream(77, 0);
  for (int i = 0; i < 400; ++i) {
    Assignment sigma = s.assignment({"x", "y"}, rng);
    CHECK(eval_formula(r.result, sigma, m) ==
          lt(sigma.at("x"), sigma.at("y")));
  }
}

TEST_CASE("qe: quantifier-free input is returned unchanged") {
  CanonicalModel m{kNat};
  Formula f = fo("x < y | x = y");
  QEReport r = qe(f, m);
  CHECK(r.result == f); // same object, not merely equal
  CHECK(r.trace.empty());
}

TEST_CASE("qe: addition axioms decide true") {
  for (const auto &sr : {kTrivial, kNat, kPosRat}) {
    CanonicalModel m{sr};
    CHECK(decide_sentence(fo("A x. A y. (x + y = y + x)", sr), m));
    CHECK(decide_sentence(fo("A x. A y. A z. (x*(y*z) = (x*y)*z)", sr), m));
  }
}

TEST_CASE("qe: nontriviality and divisibility decide true") {
  for (const auto &sr : {kTrivial, kNat, kPosRat}) {
    CanonicalModel m{sr};
    CHECK(decide_sentence(fo("E x. (p1(x) != 0 & p1(x) != 1)", sr), m));
    CHECK(decide_sentence(
        fo("A x. (x = p1(x) -> (E y. ((y = p1(y)) & (y^3 = x))))", sr), m));
  }
}

TEST_CASE("qe: layer sensitivity of idempotency") {
  CanonicalModel tr{kTrivial}, nat{kNat};
  Formula f_tr = fo("A x. (x + x = x)", kTrivial);
  Formula f_nat = fo("A x. (x + x = x)", kNat);
  CHECK(decide_sentence(f_tr, tr));
  CHECK(!decide_sentence(f_nat, nat));
}

TEST_CASE("qe: unsupported propagates for parametric layer squares") {
  CanonicalModel m{kNat};
  Formula f = fo("A x. E w. (p2(w)^2 = p2(x))");
  CHECK_THROWS_AS(decide_sentence(f, m), unsupported_error);
  // the trivial layering collapses the same sentence to true
  CanonicalModel t{kTrivial};
  CHECK(decide_sentence(fo("A x. E w. (p2(w)^2 = p2(x))", kTrivial), t));
}

TEST_CASE("qe: idempotence and variable hygiene") {
  CanonicalModel m{kNat};
  for (const char *text :
       {"E w. (x < w & w < y)", "A x. (x + x = x)",
        "E w. ((w = x * y) & PL(w))", "A u. E v. (u < v)",
        "E w. (w^2 = p1(x) & 0 < w)"}) {
    Formula f = fo(text);
    QEReport r1 = qe(f, m);
    CHECK(quantifier_free(r1.result));
    QEReport r2 = qe(r1.result, m);
    CHECK(formula_eq(r2.result, r1.result));
    for (const auto &v : all_vars(r1.result))
      CHECK(free_vars(f).count(v));
  }
}

TEST_CASE("qe commutes with substitution on random instances") {
  for (const auto &sr : {kTrivial, kNat, kPosRat}) {
    CanonicalModel m{sr};
    Sampler s{m};
    auto rng = rng_stream(2718, static_cast<int>(sr.kind()));
    int done = 0;
    while (done < 60) {
      Formula f = testgen::random_formula(rng, sr, 3, 2);
      if (quantifier_free(f))
        continue;
      QEReport r;
      try {
        r = qe(f, m);
      } catch (const unsupported_error &) {
        continue;
      } catch (const cap_error &) {
        continue;
      }
      ++done;
      auto fv = free_vars(f);
      for (int k = 0; k < 5; ++k) {
        Assignment sigma = s.assignment(fv, rng);
        Formula inst = f;
        for (const auto &[v, e] : sigma)
          inst = substitute(inst, v, e.is_zero() ? t_zero() : t_lit(e));
        bool direct;
        try {
          direct = decide_sentence(inst, m);
        } catch (const unsupported_error &) {
          continue;
        }
        CHECK(direct == eval_formula(r.result, sigma, m));
      }
    }
  }
}
