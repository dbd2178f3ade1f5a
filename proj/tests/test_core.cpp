// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "layered/core.hpp"
#include "layered/sample.hpp"

using namespace layered;

namespace {

const LayerSemiring kNat = LayerSemiring::naturals();

LayeredElem el(long layer, long num, long den = 1) {
  return LayeredElem{kNat.make(layer), Value::rat(Rat(num, den))};
}

std::vector<LayeredElem> sample_pool(const CanonicalModel &model, int count,
                                     std::uint64_t seed) {
  Sampler s{model};
  std::vector<LayeredElem> out;
  auto rng = rng_stream(seed, 1);
  for (int i = 0; i < count; ++i)
    out.push_back(s.element(rng));
  // tie-heavy corners
  out.push_back(model.zero());
  out.push_back(model.one());
  for (long l : {1L, 2L, 3L})
    for (long v : {-1L, 0L, 1L})
      if (model.layering.kind() != LayerKind::Trivial || l == 1)
        out.push_back(LayeredElem{model.layering.make(l), Value::rat(v)});
  return out;
}

// literal three-disjunct definition, with the existential searched over a
// grid of candidate witnesses
bool surpasses_brute(const LayeredElem &a, const LayeredElem &b,
                     const std::vector<LayeredElem> &candidates) {
  if (a == b)
    return true;
  if (!a.value.bot && a.value == b.value &&
      l_cmp(a.layer, b.layer) == Ordering::GT)
    return true;
  for (const auto &c : candidates)
    if (a == tadd(b, c) && l_cmp(proj2(c).layer, proj2(b).layer) != Ordering::LT)
      return true;
  return false;
}

} // namespace

TEST_CASE("tropical addition") {
  CHECK(tadd(el(2, 3), el(5, 1)) == el(2, 3));  // dominant value wins
  CHECK(tadd(el(2, 5), el(3, 5)) == el(5, 5));  // tie sums layers
  CanonicalModel m{kNat};
  CHECK(tadd(el(4, -7), m.zero()) == el(4, -7)); // zero neutral
  CHECK(tadd(m.zero(), m.zero()) == m.zero());
}

TEST_CASE("tropical multiplication") {
  CHECK(tmul(el(2, 3), el(3, 4)) == el(6, 7)); // layers multiply, values add
  CanonicalModel m{kNat};
  CHECK(tmul(el(2, 3), m.one()) == el(2, 3));
  CHECK(tmul(el(2, 3), m.zero()) == m.zero());
  CHECK(tmul(m.zero(), m.zero()) == m.zero());
}

TEST_CASE("projections") {
  CHECK(proj1(el(2, 3)) == el(1, 3));
  CHECK(proj2(el(2, 3)) == el(2, 0));
  CanonicalModel m{kNat};
  CHECK(proj2(m.zero()) == m.one()); // pi2(0) = 1
  CHECK(proj1(m.zero()) == m.zero());
}

TEST_CASE("order ignores layers") {
  CHECK(lt(el(2, 3), el(7, 4)));
  CHECK(!lt(el(2, 3), el(7, 3)));
  CanonicalModel m{kNat};
  CHECK(lt(m.zero(), el(1, -5))); // bottom is least
  CHECK(!lt(el(1, -5), m.zero()));
}

TEST_CASE("nu equivalence") {
  CHECK(nu_equiv(el(2, 3), el(7, 3)));
  CHECK(!nu_equiv(el(2, 3), el(2, 4)));
  CHECK(nu_equiv(el(2, 3), el(2, 3)));
}

TEST_CASE("surpasses: frozen cases") {
  CHECK(surpasses(el(5, 7), el(2, 3))); // larger value, layer 5 >= 2
  CHECK(surpasses(el(5, 3), el(2, 3))); // nu-tie, larger layer
  CHECK(surpasses(el(2, 3), el(2, 3))); // reflexive
  CHECK(!surpasses(el(2, 3), el(5, 3)));
  CHECK(!surpasses(el(2, 3), el(2, 4)));
  // value dominates but layer shrinks below b's: no witness c exists
  CHECK(!surpasses(el(1, 7), el(2, 3)));
  // any nu-tie with a strictly larger layer is already the second disjunct
  CHECK(surpasses(el(4, 3), el(2, 3)));
  CHECK(surpasses(el(3, 3), el(2, 3)));
}

TEST_CASE("surpasses agrees with the witness search on sampled pairs") {
  for (LayerKind kind :
       {LayerKind::Trivial, LayerKind::Nat, LayerKind::PosRat}) {
    CanonicalModel model{LayerSemiring(kind)};
    auto pool = sample_pool(model, 40, 11);
    // candidate witnesses: pool plus every (layer-from-pool, value-from-pool)
    // combination, so tie witnesses with unusual layers are reachable
    std::vector<LayeredElem> candidates = pool;
    for (const auto &x : pool)
      for (const auto &y : pool)
        if (!y.value.bot)
          candidates.push_back(LayeredElem{x.layer, y.value});
    for (const auto &a : pool)
      for (const auto &b : pool)
        CHECK(surpasses(a, b) == surpasses_brute(a, b, candidates));
  }
}

TEST_CASE("powers and value inverse") {
  CHECK(tpow(el(2, 3), 2) == el(4, 6));
  CHECK(tpow(el(2, 3), 1) == el(2, 3));
  // iterated multiplication oracle
  LayeredElem x = el(3, -5, 2);
  LayeredElem acc = x;
  for (unsigned n = 2; n <= 10; ++n) {
    acc = tmul(acc, x);
    CHECK(tpow(x, n) == acc);
  }
  CanonicalModel m{kNat};
  CHECK(value_inverse(el(2, 3)) == el(1, -3));
  CHECK(tmul(value_inverse(el(2, 3)), proj1(el(2, 3))) == m.one());
  CHECK_THROWS_AS(value_inverse(m.zero()), std::domain_error);
}

TEST_CASE("algebraic laws on random samples") {
  for (LayerKind kind :
       {LayerKind::Trivial, LayerKind::Nat, LayerKind::PosRat}) {
    CanonicalModel model{LayerSemiring(kind)};
    Sampler s{model};
    auto rng = rng_stream(17, static_cast<int>(kind));
    for (int i = 0; i < 10000; ++i) {
      LayeredElem x = s.element(rng), y = s.element(rng), z = s.element(rng);
      CHECK(tadd(x, y) == tadd(y, x));
      CHECK(tmul(x, y) == tmul(y, x));
      CHECK(tadd(tadd(x, y), z) == tadd(x, tadd(y, z)));
      CHECK(tmul(tmul(x, y), z) == tmul(x, tmul(y, z)));
      CHECK(tmul(x, tadd(y, z)) == tadd(tmul(x, y), tmul(x, z)));
      // x = pi1(x) * pi2(x)
      CHECK(x == tmul(proj1(x), proj2(x)));
      // projection identities
      CHECK(proj1(proj1(x)) == proj1(x));
      CHECK(proj2(proj2(x)) == proj2(x));
      CHECK(proj1(proj2(x)) == model.one());
      CHECK(proj2(proj1(x)) == model.one());
      // trichotomy on values
      int count = (lt(x, y) ? 1 : 0) + (nu_equiv(x, y) ? 1 : 0) +
                  (lt(y, x) ? 1 : 0);
      CHECK(count == 1);
    }
  }
}

TEST_CASE("divisible closure on the unit-layer fiber") {
  for (LayerKind kind :
       {LayerKind::Trivial, LayerKind::Nat, LayerKind::PosRat}) {
    CanonicalModel model{LayerSemiring(kind)};
    Sampler s{model};
    auto rng = rng_stream(23, static_cast<int>(kind));
    for (int i = 0; i < 200; ++i) {
      LayeredElem x = proj1(s.element(rng, /*allow_zero=*/false));
      for (unsigned n = 1; n <= 10; ++n) {
        LayeredElem root =
            make_elem(model.layering.one(), Value::rat(x.value.q / Rat(n)));
        CHECK(tpow(root, n) == x);
        CHECK(root == proj1(root));
      }
    }
  }
}

TEST_CASE("element printing") {
  CHECK(elem_to_string(el(2, 3)) == "[2]3");
  CHECK(elem_to_string(el(1, -7, 2)) == "[1]-7/2");
  CanonicalModel m{kNat};
  CHECK(elem_to_string(m.zero()) == "0");
  CHECK(elem_to_string(m.one()) == "[1]0");
}
