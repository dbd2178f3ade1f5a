// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "layered/cli.hpp"
#include "layered/parser.hpp"

using namespace layered;

namespace {

const LayerSemiring kNat = LayerSemiring::naturals();
const LayerSemiring kTrivial = LayerSemiring::trivial();
const LayerSemiring kPosRat = LayerSemiring::positive_rationals();

Formula fo(const std::string &text, const LayerSemiring &sr) {
  return parse_formula(text, sr);
}

} // namespace

TEST_CASE("evaluation: documented cases") {
  CanonicalModel m{kNat};
  Assignment sigma{{"x", parse_element("[2]3", kNat)},
                   {"y", parse_element("[5]3", kNat)}};
  CHECK(elem_to_string(eval_term(parse_term("x + y", kNat), sigma, m)) ==
        "[7]3");
  CHECK(eval_formula(fo("x = p1(x) * p2(x)", kNat), sigma, m));
  CHECK(eval_formula(fo("0 < 1", kNat), {}, m));
  CHECK_THROWS_AS(eval_term(parse_term("x + z", kNat), sigma, m), eval_error);
  CHECK_THROWS_AS(eval_formula(fo("E w. (w = w)", kNat), {}, m), eval_error);
}

TEST_CASE("decide_sentence: documented cases") {
  CanonicalModel m{kNat};
  CHECK(decide_sentence(fo("E x. (p1(x) != 0 & p1(x) != 1)", kNat), m));
  CHECK(decide_sentence(
      fo("A x. (x = p1(x) -> (E y. ((y = p1(y)) & (y^3 = x))))", kNat), m));
  CanonicalModel t{kTrivial};
  CHECK(decide_sentence(fo("A x. (x + x = x)", kTrivial), t));
  CHECK(!decide_sentence(fo("A x. (x + x = x)", kNat), m));
  CHECK_THROWS_AS(decide_sentence(fo("x < y", kNat), m),
                  std::invalid_argument);
}

TEST_CASE("decide_sentence agrees with evaluation on closed qf input") {
  CanonicalModel m{kNat};
  for (const char *text :
       {"[2]3 + [5]3 = [7]3", "[2]3 < [1]4", "p2(0) = 1",
        "([2]3)^2 = [4]6", "PL(L(3))", "L(2) + L(3) = L(5)",
        "[2]3 + [5]3 = [7]4"}) {
    Formula f = fo(text, kNat);
    CHECK(decide_sentence(f, m) == eval_formula(f, {}, m));
  }
}

TEST_CASE("poly_equal: tropical freshman's dream") {
  CanonicalModel t{kTrivial};
  Term lhs = parse_term("(x + y)^2", kTrivial);
  Term rhs = parse_term("x^2 + y^2", kTrivial);
  auto r = poly_equal(lhs, rhs, t);
  CHECK(r.equal);

  // over N the cross term changes the tie layer
  CanonicalModel m{kNat};
  Term lhs_n = parse_term("(x + y)^2", kNat);
  Term rhs_n = parse_term("x^2 + y^2", kNat);
  auto rn = poly_equal(lhs_n, rhs_n, m);
  CHECK(!rn.equal);
  REQUIRE(rn.counterexample.has_value());
  Assignment cx = *rn.counterexample;
  CHECK(!(eval_term(lhs_n, cx, m) == eval_term(rhs_n, cx, m)));
  // the disagreement is at a nu-tie
  CHECK(nu_equiv(cx.at("x"), cx.at("y")));
}

TEST_CASE("poly_equal: one-variable expansion over N") {
  // (x + 1)^2 = x^2 + x + 1 fails at the tie pi1(x) = 0: layer 4 vs 3
  CanonicalModel m{kNat};
  Term lhs = parse_term("(x + 1)^2", kNat);
  Term rhs = parse_term("x^2 + x + 1", kNat);
  auto r = poly_equal(lhs, rhs, m);
  CHECK(!r.equal);
  REQUIRE(r.counterexample.has_value());
  LayeredElem x = r.counterexample->at("x");
  CHECK(nu_equiv(x, m.one()));
  // with the doubled middle monomial the identity holds
  Term rhs2 = parse_term("x^2 + x + x + 1", kNat);
  CHECK(poly_equal(lhs, rhs2, m).equal);
  CHECK(poly_equal(lhs, lhs, m).equal);
}

TEST_CASE("poly_equal verdicts transfer to sampled evaluation") {
  CanonicalModel m{kPosRat};
  Sampler s{m};
  Term lhs = parse_term("(x + y) * (x + y)", kPosRat);
  Term rhs = parse_term("(x + y)^2", kPosRat);
  auto r = poly_equal(lhs, rhs, m);
  CHECK(r.equal);
  auto rng = rng_stream(5, 5);
  for (int i = 0; i < 10000; ++i) {
    Assignment sigma = s.assignment({"x", "y"}, rng);
    CHECK(eval_term(lhs, sigma, m) == eval_term(rhs, sigma, m));
  }
}

TEST_CASE("axiom suites: structure") {
  auto dlsf = axiom_suite(TheoryKind::DLSFL, kNat);
  auto ld = axiom_suite(TheoryKind::LDL, kNat);
  // the universal fragment omits exactly the three named axioms
  std::set<std::string> omitted;
  for (const auto &a : dlsf.axioms)
    if (!ld.find(a.id))
      omitted.insert(a.id);
  CHECK(omitted ==
        std::set<std::string>{"pi1-inverse", "nontrivial", "root-2", "root-3",
                              "root-4", "root-5"});
  for (const auto &a : ld.axioms) {
    CHECK(dlsf.find(a.id) != nullptr);
    CHECK(a.universal); // the universal fragment is universal
  }
  // non-universal axioms are exactly inverse/nontrivial/divisibility
  for (const auto &a : dlsf.axioms)
    CHECK(a.universal == (omitted.count(a.id) == 0));
  // plain suites carry no layer-constant sentences
  auto plain = axiom_suite(TheoryKind::DLSF, kNat);
  for (const auto &a : plain.axioms)
    CHECK(a.id.rfind("layer-", 0) != 0);
}

TEST_CASE("check_axioms passes on the canonical model") {
  for (const auto &sr : {kTrivial, kNat, kPosRat}) {
    auto suite = axiom_suite(TheoryKind::DLSFL, sr);
    auto report = check_axioms(suite, 500, 7);
    for (const auto &r : report.results) {
      CAPTURE(r.id);
      CHECK(r.pass);
    }
    CHECK(report.all_pass());
  }
}

TEST_CASE("check_axioms reports a counterexample for a wrong sentence") {
  AxiomSuite suite{TheoryKind::LD, kNat, {}};
  suite.axioms.push_back(
      Axiom{"bogus-idempotent", fo("A x. (x + x = x)", kNat), true,
            WitnessKind::None, 0});
  auto report = check_axioms(suite, 2000, 3);
  REQUIRE(report.results.size() == 1);
  CHECK(!report.results[0].pass);
  CHECK(!report.results[0].counterexample.empty());
  // the report text format is line-oriented PASS/FAIL
  std::string text = report_text(report);
  CHECK(text.rfind("FAIL bogus-idempotent [", 0) == 0);
  // machine mode carries the same verdict
  std::string json = report_json(report);
  CHECK(json.find("\"status\": \"fail\"") != std::string::npos);
  CHECK(json.find("\"id\": \"bogus-idempotent\"") != std::string::npos);
}

TEST_CASE("derived order sentences hold") {
  for (const auto &sr : {kTrivial, kNat, kPosRat}) {
    CanonicalModel m{sr};
    CHECK(decide_sentence(fo("A x. ~(x < x)", sr), m));
    CHECK(decide_sentence(
        fo("A x. A y. A z. ((x < y & y < z) -> x < z)", sr), m));
    CHECK(decide_sentence(
        fo("A x. A y. (x < y | p1(x) = p1(y) | y < x)", sr), m));
  }
  // the literal three-way totality with equality is layer-sensitive:
  // true only when the layering is trivial
  CanonicalModel t{kTrivial}, n{kNat};
  CHECK(decide_sentence(fo("A x. A y. (x < y | x = y | y < x)", kTrivial), t));
  CHECK(!decide_sentence(fo("A x. A y. (x < y | x = y | y < x)", kNat), n));
}
