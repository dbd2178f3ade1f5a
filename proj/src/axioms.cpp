// SPDX-License-Identifier: Apache-2.0
#include "layered/axioms.hpp"

#include "layered/parser.hpp"

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace layered {

TheoryKind theory_kind_from_string(const std::string &s) {
  if (s == "ld")
    return TheoryKind::LD;
  if (s == "ld-l")
    return TheoryKind::LDL;
  if (s == "dlsf")
    return TheoryKind::DLSF;
  if (s == "dlsf-l")
    return TheoryKind::DLSFL;
  throw std::domain_error("unknown axiom suite: " + s);
}

std::string theory_kind_name(TheoryKind k) {
  switch (k) {
  case TheoryKind::LD:
    return "ld";
  case TheoryKind::LDL:
    return "ld-l";
  case TheoryKind::DLSF:
    return "dlsf";
  case TheoryKind::DLSFL:
    return "dlsf-l";
  }
  return "?";
}

const Axiom *AxiomSuite::find(const std::string &id) const {
  for (const auto &a : axioms)
    if (a.id == id)
      return &a;
  return nullptr;
}

namespace {

// representative layer constants used to instantiate per-constant sentences
std::vector<std::string> layer_reps(const LayerSemiring &sr) {
  switch (sr.kind()) {
  case LayerKind::Trivial:
    return {"1"};
  case LayerKind::Nat:
    return {"1", "2", "3", "7"};
  case LayerKind::PosRat:
    return {"1", "2", "1/2", "3/5"};
  }
  return {};
}

} // namespace

AxiomSuite axiom_suite(TheoryKind kind, const LayerSemiring &sr,
                       unsigned n_max) {
  AxiomSuite suite{kind, sr, {}};
  auto add = [&](const std::string &id, const std::string &text,
                 bool universal = true, WitnessKind w = WitnessKind::None,
                 unsigned n = 0) {
    suite.axioms.push_back(Axiom{id, parse_formula(text, sr), universal, w, n});
  };
  bool closed = kind == TheoryKind::DLSF || kind == TheoryKind::DLSFL;
  bool layered_lang = kind == TheoryKind::LDL || kind == TheoryKind::DLSFL;

  add("mul-unit", "A x. ((1 * x = x) & (x * 1 = x))");
  add("mul-comm", "A x. A y. (x * y = y * x)");
  add("mul-assoc", "A x. A y. A z. (x * (y * z) = (x * y) * z)");
  if (closed)
    add("pi1-inverse", "A x. (~(x = 0) -> (E y. (y * p1(x) = 1)))", false,
        WitnessKind::Pi1Inverse);
  add("zero-mul-iff",
      "A x. A y. (((x = 0 | y = 0) -> x * y = 0)"
      " & (x * y = 0 -> (x = 0 | y = 0)))");
  add("add-unit", "A x. ((0 + x = x) & (x + 0 = x))");
  add("mul-zero", "A x. ((0 * x = 0) & (x * 0 = 0))");
  add("pi1-add-comm", "A x. A y. (p1(x) + p1(y) = p1(y) + p1(x))");
  add("pi1-add-assoc",
      "A x. A y. A z. (p1(x) + (p1(y) + p1(z)) = (p1(x) + p1(y)) + p1(z))");
  add("pi2-add-comm", "A x. A y. (p2(x) + p2(y) = p2(y) + p2(x))");
  add("pi2-add-assoc",
      "A x. A y. A z. (p2(x) + (p2(y) + p2(z)) = (p2(x) + p2(y)) + p2(z))");
  add("proj-of-one", "(p1(1) = 1) & (p2(1) = 1)");
  add("pi1-zero", "p1(0) = 0");
  add("pi2-zero", "p2(0) = 1");
  if (closed)
    add("nontrivial", "E x. (~(p1(x) = 0) & ~(p1(x) = 1))", false,
        WitnessKind::Nontrivial);
  add("lt-via-pi1",
      "A x. A y. ((x < y -> p1(x) < p1(y)) & (p1(x) < p1(y) -> x < y))");
  add("pi1-lt-trans",
      "A x. A y. A z. ((p1(x) < p1(y) & p1(y) < p1(z)) -> p1(x) < p1(z))");
  add("pi1-lt-total",
      "A x. A y. (p1(x) < p1(y) | p1(x) = p1(y) | p1(y) < p1(x))");
  add("pi2-lt-irrefl", "A x. ~(p2(x) < p2(x))");
  add("pi2-lt-trans",
      "A x. A y. A z. ((p2(x) < p2(y) & p2(y) < p2(z)) -> p2(x) < p2(z))");
  // totality on the pi2 sort is about the layer order, which the element
  // order (values only) cannot express for a nontrivial layering: the check
  // samples the layer comparison directly
  suite.axioms.push_back(Axiom{
      "pi2-lt-total",
      parse_formula("A x. A y. (p2(x) < p2(y) | p2(x) = p2(y)"
                    " | p2(y) < p2(x))",
                    sr),
      true, WitnessKind::LayerOrderTotal, 0, sr.kind() == LayerKind::Trivial});
  add("pi1-mul-hom", "A x. A y. (p1(x * y) = p1(x) * p1(y))");
  // the multiplicative pi2 homomorphism and the tie-addition cases hold off
  // the zero element; at zero the normalized layer (pi2(0) = 1) takes over
  add("pi2-mul-hom",
      "A x. A y. ((x != 0 & y != 0) -> p2(x * y) = p2(x) * p2(y))");
  add("pi1-add-dominance",
      "A x. A y. ((p1(x) >= p1(y) & p1(x + y) = p1(x))"
      " | (p1(x) <= p1(y) & p1(x + y) = p1(y)))");
  add("pi2-add-cases",
      "A x. A y. ((x != 0 | y != 0) -> ((p1(x) > p1(y) & p2(x + y) = p2(x))"
      " | (p1(x) < p1(y) & p2(x + y) = p2(y))"
      " | (p1(x) = p1(y) & p2(x + y) = p2(x) + p2(y))))");
  add("pi1-idempotent", "A x. (p1(p1(x)) = p1(x))");
  add("pi2-idempotent", "A x. (p2(p2(x)) = p2(x))");
  add("proj-cross", "A x. ((p1(p2(x)) = 1) & (p2(p1(x)) = 1))");
  add("eq-componentwise",
      "A x. A y. ((x = y -> (p1(x) = p1(y) & p2(x) = p2(y)))"
      " & ((p1(x) = p1(y) & p2(x) = p2(y)) -> x = y))");
  if (closed)
    for (unsigned n = 2; n <= n_max; ++n)
      add("root-" + std::to_string(n),
          "A x. (x = p1(x) -> (E y. ((y = p1(y)) & (y^" + std::to_string(n) +
              " = x))))",
          false, WitnessKind::NthRoot, n);

  if (layered_lang) {
    for (const auto &rep : layer_reps(sr)) {
      add("layer-const-" + rep, "L(" + rep + ") = p2(L(" + rep + "))");
      add("layer-unit-" + rep,
          "((p2(L(" + rep + ")) = 1) -> (L(" + rep + ") = 1))"
          " & ((L(" + rep + ") = 1) -> (p2(L(" + rep + ")) = 1))");
    }
    add("pl-definition",
        "A x. ((x = p2(x) -> PL(x)) & (PL(x) -> x = p2(x)))");
  }

  // derived order facts (consequences, kept for regression visibility)
  add("derived-lt-irrefl", "A x. ~(x < x)");
  add("derived-lt-trans", "A x. A y. A z. ((x < y & y < z) -> x < z)");
  add("derived-lt-total-nu", "A x. A y. (x < y | p1(x) = p1(y) | y < x)");

  return suite;
}

bool CheckReport::all_pass() const {
  for (const auto &r : results)
    if (!r.pass)
      return false;
  return true;
}

namespace {

// strips the leading universal prefix
std::pair<std::vector<std::string>, Formula> matrix_of(const Formula &f) {
  std::vector<std::string> vars;
  Formula g = f;
  while (g->kind == FormulaKind::Forall) {
    vars.push_back(g->var);
    g = g->f1;
  }
  return {vars, g};
}

// one sampled check; true = pass
bool check_once(const Axiom &ax, const Sampler &sampler, std::mt19937_64 &rng,
                Assignment &sigma_out) {
  const CanonicalModel &model = sampler.model();
  auto [vars, matrix] = matrix_of(ax.sentence);
  std::set<std::string> vs(vars.begin(), vars.end());
  Assignment sigma = sampler.assignment(vs, rng);
  sigma_out = sigma;
  switch (ax.witness) {
  case WitnessKind::None:
    return eval_formula(matrix, sigma, model);
  case WitnessKind::Pi1Inverse: {
    LayeredElem x = sigma.at("x");
    if (x.is_zero())
      return true;
    return tmul(value_inverse(x), proj1(x)) == model.one();
  }
  case WitnessKind::NthRoot: {
    // force the premise: check on the pi1 projection of the sample
    LayeredElem x = proj1(sigma.at("x"));
    sigma_out["x"] = x;
    LayeredElem y = x.is_zero()
                        ? model.zero()
                        : make_elem(model.layering.one(),
                                    Value::rat(x.value.q / Rat(ax.root_n)));
    return y == proj1(y) && tpow(y, ax.root_n) == x;
  }
  case WitnessKind::Nontrivial: {
    LayeredElem w{model.layering.one(), Value::rat(1)};
    return proj1(w) != model.zero() && proj1(w) != model.one();
  }
  case WitnessKind::LayerOrderTotal: {
    LayerElem a = sigma.at("x").layer;
    LayerElem b = sigma.at("y").layer;
    Ordering o = l_cmp(a, b);
    return (o == Ordering::LT || o == Ordering::EQ || o == Ordering::GT) &&
           (o == Ordering::EQ) == (a == b);
  }
  }
  return false;
}

} // namespace

CheckReport check_axioms(const AxiomSuite &suite, std::size_t samples,
                         std::uint64_t seed, const ExecPolicy &exec) {
  Sampler sampler{CanonicalModel{suite.layering}};
  CheckReport report;
  report.results.reserve(suite.axioms.size());
  for (std::size_t ai = 0; ai < suite.axioms.size(); ++ai) {
    const Axiom &ax = suite.axioms[ai];
    std::size_t n = samples;
    if (ax.witness == WitnessKind::Nontrivial ||
        (matrix_of(ax.sentence).first.empty() &&
         ax.witness == WitnessKind::None))
      n = 1; // sample-independent, one evaluation settles it
    std::size_t first_fail = n;
    std::string counterexample;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec.parallel && n > 1)
#endif
    for (long si = 0; si < static_cast<long>(n); ++si) {
      auto rng = rng_stream(seed, ai, static_cast<std::uint64_t>(si));
      Assignment sigma;
      bool ok = check_once(ax, sampler, rng, sigma);
      if (!ok) {
#ifdef _OPENMP
#pragma omp critical
#endif
        {
          if (static_cast<std::size_t>(si) < first_fail) {
            first_fail = static_cast<std::size_t>(si);
            counterexample = assignment_to_string(sigma);
          }
        }
      }
    }
    AxiomResult r;
    r.id = ax.id;
    r.pass = first_fail == n;
    r.counterexample = counterexample;
    report.results.push_back(std::move(r));
  }
  return report;
}

std::string report_text(const CheckReport &r) {
  std::string out;
  for (const auto &a : r.results) {
    out += a.pass ? "PASS " : "FAIL ";
    out += a.id;
    if (!a.pass) {
      out += " [";
      out += a.counterexample;
      out += "]";
    }
    out += "\n";
  }
  return out;
}

std::string report_json(const CheckReport &r) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto &a : r.results) {
    nlohmann::json rec;
    rec["id"] = a.id;
    rec["status"] = a.pass ? "pass" : "fail";
    rec["counterexample"] = a.counterexample;
    arr.push_back(std::move(rec));
  }
  return arr.dump(2) + "\n";
}

} // namespace layered
