// SPDX-License-Identifier: Apache-2.0
#include "layered/core.hpp"

namespace layered {

LayeredElem make_elem(LayerElem layer, Value value) {
  if (value.bot)
    return LayeredElem{LayerElem{layer.kind, 1}, Value::bottom()};
  return LayeredElem{std::move(layer), std::move(value)};
}

LayeredElem zero_elem(const LayerSemiring &s) {
  return LayeredElem{s.one(), Value::bottom()};
}

LayeredElem one_elem(const LayerSemiring &s) {
  return LayeredElem{s.one(), Value::rat(0)};
}

LayeredElem tadd(const LayeredElem &x, const LayeredElem &y) {
  if (x.value < y.value)
    return y;
  if (y.value < x.value)
    return x;
  if (x.value.bot) // both zero
    return x;
  return LayeredElem{l_add(x.layer, y.layer), x.value};
}

LayeredElem tmul(const LayeredElem &x, const LayeredElem &y) {
  if (x.value.bot || y.value.bot)
    return make_elem(LayerElem{x.layer.kind, 1}, Value::bottom());
  return LayeredElem{l_mul(x.layer, y.layer), Value::rat(x.value.q + y.value.q)};
}

LayeredElem proj1(const LayeredElem &x) {
  return make_elem(LayerElem{x.layer.kind, 1}, x.value);
}

LayeredElem proj2(const LayeredElem &x) {
  return LayeredElem{x.layer, Value::rat(0)};
}

bool lt(const LayeredElem &x, const LayeredElem &y) {
  return x.value < y.value;
}

bool nu_equiv(const LayeredElem &x, const LayeredElem &y) {
  return x.value == y.value;
}

bool surpasses(const LayeredElem &a, const LayeredElem &b) {
  if (a == b)
    return true;
  if (nu_equiv(a, b) && !a.value.bot &&
      l_cmp(a.layer, b.layer) == Ordering::GT)
    return true;
  // third disjunct: exists c with a = b + c and pi2(c) >= pi2(b)
  if (b.value < a.value) // only c = a can give b + c = a
    return l_cmp(a.layer, b.layer) != Ordering::LT;
  if (a.value == b.value && !a.value.bot) {
    // c must tie b: layer(b) + lambda = layer(a) with lambda >= layer(b)
    LayerSemiring s(a.layer.kind);
    auto lambda = s.subtract(b.layer, a.layer);
    return lambda && l_cmp(*lambda, b.layer) != Ordering::LT;
  }
  return false;
}

LayeredElem tpow(const LayeredElem &x, unsigned n) {
  LayeredElem r = x;
  for (unsigned i = 1; i < n; ++i)
    r = tmul(r, x);
  return r;
}

LayeredElem value_inverse(const LayeredElem &x) {
  if (x.is_zero())
    throw std::domain_error("value_inverse of the zero element");
  return LayeredElem{LayerElem{x.layer.kind, 1}, Value::rat(-x.value.q)};
}

std::string elem_to_string(const LayeredElem &x) {
  if (x.is_zero())
    return "0";
  return "[" + layer_to_string(x.layer) + "]" + rat_to_string(x.value.q);
}

} // namespace layered
