// SPDX-License-Identifier: Apache-2.0
//
// Arithmetic of layered elements in the canonical model L x Q, written in
// logarithmic notation: the value sort is (Q, +, max, -inf), so tropical
// multiplication adds values and tropical addition keeps the larger value,
// summing layers on ties.
#pragma once

#include "layered/layering.hpp"

#include <string>

namespace layered {

/// Value fiber element: an exact rational, or bottom (-inf), the value of
/// the zero element. Bottom is the least value.
struct Value {
  bool bot = true;
  Rat q = 0; // meaningful only when !bot

  static Value bottom() { return Value{}; }
  static Value rat(Rat r) { return Value{false, std::move(r)}; }

  bool operator==(const Value &o) const {
    return bot == o.bot && (bot || q == o.q);
  }
  bool operator<(const Value &o) const {
    if (bot)
      return !o.bot;
    return !o.bot && q < o.q;
  }
};

/// A layered element (layer, value). The zero element is uniquely
/// (1_L, bottom): any operation producing a bottom value renormalizes the
/// layer to 1_L, as forced by pi2(0) = 1.
struct LayeredElem {
  LayerElem layer;
  Value value;

  bool is_zero() const { return value.bot; }
  bool operator==(const LayeredElem &o) const = default;
};

LayeredElem make_elem(LayerElem layer, Value value);
LayeredElem zero_elem(const LayerSemiring &s);
LayeredElem one_elem(const LayerSemiring &s);

LayeredElem tadd(const LayeredElem &x, const LayeredElem &y);
LayeredElem tmul(const LayeredElem &x, const LayeredElem &y);
LayeredElem proj1(const LayeredElem &x);
LayeredElem proj2(const LayeredElem &x);
bool lt(const LayeredElem &x, const LayeredElem &y);
bool nu_equiv(const LayeredElem &x, const LayeredElem &y);

/// The surpasses relation: a = b, or a and b are nu-equal with a's layer
/// strictly larger, or a = b + c for some c with pi2(c) >= pi2(b). The
/// existential is resolved exactly by case analysis on the values.
bool surpasses(const LayeredElem &a, const LayeredElem &b);

LayeredElem tpow(const LayeredElem &x, unsigned n); // n >= 1

/// Inverse of the value part: value_inverse(x) * proj1(x) = 1. Throws
/// std::domain_error on the zero element.
LayeredElem value_inverse(const LayeredElem &x);

/// The canonical model for a given layering semiring.
struct CanonicalModel {
  LayerSemiring layering;

  explicit CanonicalModel(LayerSemiring s) : layering(std::move(s)) {}
  LayeredElem zero() const { return zero_elem(layering); }
  LayeredElem one() const { return one_elem(layering); }
};

std::string elem_to_string(const LayeredElem &x);

} // namespace layered
