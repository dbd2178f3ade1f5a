// SPDX-License-Identifier: Apache-2.0
#include "layered/sample.hpp"

namespace layered {

Value Sampler::value(std::mt19937_64 &rng) const {
  std::uniform_int_distribution<int> num(-100, 100);
  std::uniform_int_distribution<int> den(1, 10);
  return Value::rat(Rat(num(rng), den(rng)));
}

LayerElem Sampler::layer(std::mt19937_64 &rng) const {
  switch (model_.layering.kind()) {
  case LayerKind::Trivial:
    return model_.layering.one();
  case LayerKind::Nat: {
    std::uniform_int_distribution<int> d(1, 20);
    return model_.layering.make(d(rng));
  }
  case LayerKind::PosRat: {
    std::uniform_int_distribution<int> d(1, 12);
    int a = d(rng), b = d(rng);
    return model_.layering.make(Rat(a, b));
  }
  }
  throw std::logic_error("bad layer kind");
}

LayeredElem Sampler::element(std::mt19937_64 &rng, bool allow_zero) const {
  std::uniform_int_distribution<int> z(0, 15);
  if (allow_zero && z(rng) == 0)
    return model_.zero();
  LayerElem l = layer(rng);
  Value v = value(rng);
  return LayeredElem{l, v};
}

Assignment Sampler::assignment(const std::set<std::string> &vars,
                               std::mt19937_64 &rng, bool allow_zero) const {
  Assignment sigma;
  for (const auto &v : vars)
    sigma[v] = element(rng, allow_zero);
  return sigma;
}

} // namespace layered
