// SPDX-License-Identifier: Apache-2.0
#include "layered/decide.hpp"

namespace layered {

bool decide_sentence(const Formula &f, const CanonicalModel &model,
                     const Caps &caps, const ExecPolicy &exec) {
  if (!free_vars(f).empty())
    throw std::invalid_argument("decide_sentence requires a closed formula");
  QEReport r = qe(f, model, caps, exec);
  return eval_formula(r.result, {}, model);
}

namespace {

// element pool rich in nu-ties (equal values, different layers)
std::vector<LayeredElem> corner_elements(const CanonicalModel &model) {
  const LayerSemiring &sr = model.layering;
  std::vector<LayeredElem> out;
  out.push_back(model.zero());
  std::vector<Rat> values{Rat(0), Rat(1), Rat(-1)};
  std::vector<Rat> layers;
  switch (sr.kind()) {
  case LayerKind::Trivial:
    layers = {Rat(1)};
    break;
  case LayerKind::Nat:
    layers = {Rat(1), Rat(2), Rat(3)};
    break;
  case LayerKind::PosRat:
    layers = {Rat(1), Rat(2), Rat(1, 2)};
    break;
  }
  for (const Rat &l : layers)
    for (const Rat &v : values)
      out.push_back(LayeredElem{sr.make(l), Value::rat(v)});
  return out;
}

} // namespace

PolyEqResult poly_equal(const Term &p, const Term &q,
                        const CanonicalModel &model, const Caps &caps,
                        std::uint64_t seed, std::size_t samples,
                        const ExecPolicy &exec) {
  std::set<std::string> vars = term_vars(p);
  for (const auto &v : term_vars(q))
    vars.insert(v);

  Formula sentence = f_eq(p, q);
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    sentence = f_forall(*it, sentence);

  if (decide_sentence(sentence, model, caps, exec))
    return PolyEqResult{true, std::nullopt};

  auto differs = [&](const Assignment &sigma) {
    return !(eval_term(p, sigma, model) == eval_term(q, sigma, model));
  };

  // corner grid first: disagreements of tropical polynomials concentrate on
  // nu-tied points that random values rarely hit
  std::vector<std::string> vlist(vars.begin(), vars.end());
  auto corners = corner_elements(model);
  std::size_t grid = 1;
  bool grid_ok = true;
  for (std::size_t i = 0; i < vlist.size(); ++i) {
    if (grid > 100000 / corners.size()) {
      grid_ok = false;
      break;
    }
    grid *= corners.size();
  }
  if (grid_ok && !vlist.empty()) {
    for (std::size_t idx = 0; idx < grid; ++idx) {
      Assignment sigma;
      std::size_t rem = idx;
      for (const auto &v : vlist) {
        sigma[v] = corners[rem % corners.size()];
        rem /= corners.size();
      }
      if (differs(sigma))
        return PolyEqResult{false, sigma};
    }
  }

  Sampler sampler{model};
  for (std::size_t si = 0; si < samples; ++si) {
    auto rng = rng_stream(seed, 0x9e3779b9, si);
    Assignment sigma = sampler.assignment(vars, rng);
    if (differs(sigma))
      return PolyEqResult{false, sigma};
  }
  return PolyEqResult{false, std::nullopt};
}

} // namespace layered
