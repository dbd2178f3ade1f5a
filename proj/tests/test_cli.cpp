// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "layered/cli.hpp"
#include "layered/parser.hpp"

using namespace layered;

namespace {

CliConfig cfg(const std::string &command, const std::string &layering) {
  CliConfig c;
  c.command = command;
  c.layering = layering;
  return c;
}

} // namespace

TEST_CASE("decide: documented invocations") {
  auto r1 = run(cfg("decide", "trivial"), "A x. A y. ((x+y)^2 = x^2 + y^2)");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == "true\n");
  CHECK(r1.err.empty());

  auto r2 = run(cfg("decide", "nat"), "A x. (x + x = x)");
  CHECK(r2.exit_code == 1);
  CHECK(r2.out == "false\n");
}

TEST_CASE("eval: documented invocation") {
  CliConfig c = cfg("eval", "nat");
  c.assign = "x=[2]3,y=[5]3";
  auto r = run(c, "x + y");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "[7]3\n");
}

TEST_CASE("qe prints a quantifier-free equivalent") {
  CliConfig c = cfg("qe", "nat");
  auto r = run(c, "E w. (x < w & w < y)");
  CHECK(r.exit_code == 0);
  CHECK(!r.out.empty());
  // the output parses and mentions no eliminated variable
  Formula back =
      parse_formula(r.out.substr(0, r.out.find('\n')), LayerSemiring::naturals());
  CHECK(quantifier_free(back));
  CHECK(!all_vars(back).count("w"));

  c.trace = true;
  auto rt = run(c, "E w. (x < w & w < y)");
  CHECK(rt.exit_code == 0);
  CHECK(rt.out.find("# exists w") != std::string::npos);
}

TEST_CASE("simplify prints an essential-form DNF that parses") {
  auto r = run(cfg("simplify", "nat"), "([1]3 + [1]5 + x < y) & true");
  CHECK(r.exit_code == 0);
  CHECK_NOTHROW(parse_formula(r.out.substr(0, r.out.find('\n')),
                              LayerSemiring::naturals()));
  auto bad = run(cfg("simplify", "nat"), "E w. (w = w)");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("poly-eq verdicts and counterexamples") {
  auto r1 = run(cfg("poly-eq", "trivial"), "(x + y)^2 == x^2 + y^2");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == "true\n");

  auto r2 = run(cfg("poly-eq", "nat"), "(x + y)^2 == x^2 + y^2");
  CHECK(r2.exit_code == 1);
  CHECK(r2.out.rfind("false\ncounterexample: ", 0) == 0);

  auto r3 = run(cfg("poly-eq", "nat"), "x + y");
  CHECK(r3.exit_code == 2); // missing '=='
}

TEST_CASE("axioms report, text and machine mode") {
  CliConfig c = cfg("axioms", "nat");
  c.samples = 200;
  c.suite = "dlsf-l";
  auto r = run(c, "");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS mul-comm") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  c.json = true;
  auto rj = run(c, "");
  CHECK(rj.exit_code == 0);
  CHECK(rj.out.find("\"id\": \"mul-comm\"") != std::string::npos);
  CHECK(rj.out.find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("error paths use distinct exit codes") {
  // 2: parse error, single-line diagnostic on stderr, nothing on stdout
  auto r2 = run(cfg("decide", "nat"), "A x. (x <");
  CHECK(r2.exit_code == 2);
  CHECK(r2.out.empty());
  CHECK(!r2.err.empty());
  CHECK(r2.err.find('\n') == r2.err.size() - 1);

  // 3: honest unsupported fragment
  auto r3 = run(cfg("decide", "nat"), "A x. E w. (p2(w)^2 = p2(x))");
  CHECK(r3.exit_code == 3);
  CHECK(r3.out.empty());

  // 4: cap exceeded
  CliConfig tight = cfg("decide", "nat");
  tight.monomial_cap = 2;
  auto r4 = run(tight, "A x. A y. ((x + y)^3 = x^3 + y^3)");
  CHECK(r4.exit_code == 4);

  // 2: unbound variable in eval
  auto r5 = run(cfg("eval", "nat"), "x + y");
  CHECK(r5.exit_code == 2);

  // 2: assignment literal invalid for the active semiring
  CliConfig c6 = cfg("eval", "trivial");
  c6.assign = "x=[2]3";
  auto r6 = run(c6, "x");
  CHECK(r6.exit_code == 2);

  // 2: unknown layering
  auto r7 = run(cfg("decide", "integers"), "0 = 0");
  CHECK(r7.exit_code == 2);
}

TEST_CASE("outputs are byte-deterministic") {
  CliConfig c = cfg("axioms", "posrat");
  c.samples = 100;
  c.seed = 42;
  auto a = run(c, "");
  auto b = run(c, "");
  CHECK(a.out == b.out);
  CHECK(a.exit_code == b.exit_code);
  CliConfig q = cfg("qe", "nat");
  auto x = run(q, "E w. ((w = x * y) & PL(w))");
  auto y = run(q, "E w. ((w = x * y) & PL(w))");
  CHECK(x.out == y.out);
}
