// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "layered/eval.hpp"

#include <random>
#include <set>

namespace layered {

/// Deterministic element/assignment sampling. Values are p/q with |p| <= 100
/// and 1 <= q <= 10, plus the zero element with probability 1/16 (when
/// allowed); layers are uniform over 1..20 for Nat and small fractions a/b
/// with a,b in 1..12 for PosRat. Streams are derived by mixing (seed, index)
/// so that serial and parallel runs see identical data.
class Sampler {
public:
  explicit Sampler(CanonicalModel model) : model_(std::move(model)) {}

  LayeredElem element(std::mt19937_64 &rng, bool allow_zero = true) const;
  LayerElem layer(std::mt19937_64 &rng) const;
  Value value(std::mt19937_64 &rng) const; // never bottom

  Assignment assignment(const std::set<std::string> &vars,
                        std::mt19937_64 &rng, bool allow_zero = true) const;

  const CanonicalModel &model() const { return model_; }

private:
  CanonicalModel model_;
};

inline std::mt19937_64 rng_stream(std::uint64_t seed, std::uint64_t a,
                                  std::uint64_t b = 0) {
  return std::mt19937_64(mix64(seed ^ mix64(a ^ mix64(b))));
}

} // namespace layered
