// SPDX-License-Identifier: Apache-2.0
#include "layered/poly.hpp"

#include <algorithm>
#include <sstream>

namespace layered {

// Hard guard against runaway distributive expansion.
static constexpr std::size_t kExpansionGuard = 200000;

static unsigned long to_ulong_exp(const Int &n) {
  if (n < 0 || n > 1000000)
    throw cap_error("exponent magnitude", 1000000);
  return n.convert_to<unsigned long>();
}

static bool mono_less(const Monomial &a, const Monomial &b) {
  if (a.p1_exps != b.p1_exps)
    return a.p1_exps < b.p1_exps;
  if (a.p2_exps != b.p2_exps)
    return a.p2_exps < b.p2_exps;
  if (a.value != b.value)
    return a.value < b.value;
  return a.layer.v < b.layer.v;
}

PolyNF poly_canonical(PolyNF p) {
  std::sort(p.monomials.begin(), p.monomials.end(), mono_less);
  std::vector<Monomial> merged;
  for (auto &m : p.monomials) {
    if (!merged.empty() && merged.back().same_shape(m))
      merged.back().layer = l_add(merged.back().layer, m.layer);
    else
      merged.push_back(std::move(m));
  }
  p.monomials = std::move(merged);
  return p;
}

PolyNF poly_zero(LayerKind kind) { return PolyNF{kind, {}}; }

PolyNF poly_const(const LayeredElem &c) {
  PolyNF p{c.layer.kind, {}};
  if (!c.is_zero())
    p.monomials.push_back(Monomial{{}, {}, c.layer, c.value.q});
  return p;
}

PolyNF poly_var(LayerKind kind, const std::string &name) {
  // x expands to pi1(x) * pi2(x) so monomials mention projections only
  Monomial m{{{name, 1}}, {{name, 1}}, LayerElem{kind, 1}, 0};
  return PolyNF{kind, {std::move(m)}};
}

PolyNF poly_proj1_var(LayerKind kind, const std::string &name) {
  Monomial m{{{name, 1}}, {}, LayerElem{kind, 1}, 0};
  return PolyNF{kind, {std::move(m)}};
}

PolyNF poly_proj2_var(LayerKind kind, const std::string &name) {
  Monomial m{{}, {{name, 1}}, LayerElem{kind, 1}, 0};
  return PolyNF{kind, {std::move(m)}};
}

PolyNF poly_add(const PolyNF &a, const PolyNF &b) {
  PolyNF r = a;
  r.monomials.insert(r.monomials.end(), b.monomials.begin(),
                     b.monomials.end());
  if (r.monomials.size() > kExpansionGuard)
    throw cap_error("monomials in expansion", kExpansionGuard);
  return poly_canonical(std::move(r));
}

static void add_exps(std::map<std::string, Int> &dst,
                     const std::map<std::string, Int> &src) {
  for (const auto &[v, e] : src) {
    Int &slot = dst[v];
    slot += e;
    if (slot == 0)
      dst.erase(v);
  }
}

PolyNF poly_mul(const PolyNF &a, const PolyNF &b) {
  if (a.monomials.size() * b.monomials.size() > kExpansionGuard)
    throw cap_error("monomials in expansion", kExpansionGuard);
  PolyNF r{a.kind, {}};
  for (const auto &ma : a.monomials)
    for (const auto &mb : b.monomials) {
      Monomial m = ma;
      add_exps(m.p1_exps, mb.p1_exps);
      add_exps(m.p2_exps, mb.p2_exps);
      m.layer = l_mul(ma.layer, mb.layer);
      m.value = ma.value + mb.value;
      r.monomials.push_back(std::move(m));
    }
  return poly_canonical(std::move(r));
}

PolyNF poly_pow(const PolyNF &a, const Int &n) {
  unsigned long k = to_ulong_exp(n);
  if (k == 0)
    throw std::logic_error("poly_pow exponent must be >= 1");
  PolyNF r = a;
  for (unsigned long i = 1; i < k; ++i)
    r = poly_mul(r, a);
  return r;
}

LayeredElem eval_monomial(const Monomial &m,
                          const std::map<std::string, LayeredElem> &sigma) {
  LayerElem layer = m.layer;
  Value val = Value::rat(m.value);
  for (const auto &[v, e] : m.p1_exps) {
    auto it = sigma.find(v);
    if (it == sigma.end())
      throw eval_error("unbound variable " + v);
    if (it->second.is_zero()) {
      if (e < 0)
        throw eval_error("inverted zero value for " + v);
      return zero_elem(LayerSemiring(m.layer.kind));
    }
    val = Value::rat(val.q + Rat(e) * it->second.value.q);
  }
  for (const auto &[v, e] : m.p2_exps) {
    auto it = sigma.find(v);
    if (it == sigma.end())
      throw eval_error("unbound variable " + v);
    layer = l_mul(layer, l_pow(it->second.layer, to_ulong_exp(e)));
  }
  return make_elem(layer, val);
}

LayeredElem eval_poly(const PolyNF &p,
                      const std::map<std::string, LayeredElem> &sigma) {
  LayeredElem acc = zero_elem(LayerSemiring(p.kind));
  for (const auto &m : p.monomials)
    acc = tadd(acc, eval_monomial(m, sigma));
  return acc;
}

std::set<std::string> poly_vars(const PolyNF &p) {
  std::set<std::string> out;
  for (const auto &m : p.monomials) {
    for (const auto &[v, e] : m.p1_exps)
      out.insert(v);
    for (const auto &[v, e] : m.p2_exps)
      out.insert(v);
  }
  return out;
}

std::string poly_to_string(const PolyNF &p) {
  if (p.is_zero())
    return "0";
  std::ostringstream os;
  bool first_m = true;
  for (const auto &m : p.monomials) {
    if (!first_m)
      os << " + ";
    first_m = false;
    os << "[" << layer_to_string(m.layer) << "]" << rat_to_string(m.value);
    for (const auto &[v, e] : m.p1_exps)
      os << "*p1(" << v << ")" << (e == 1 ? "" : "^" + e.str());
    for (const auto &[v, e] : m.p2_exps)
      os << "*p2(" << v << ")" << (e == 1 ? "" : "^" + e.str());
  }
  return os.str();
}

// ---------------------------------------------------------------------------

static bool laymono_less(const LayMonomial &a, const LayMonomial &b) {
  if (a.exps != b.exps)
    return a.exps < b.exps;
  return a.coeff.v < b.coeff.v;
}

LayPoly lay_canonical(LayPoly p) {
  std::sort(p.monomials.begin(), p.monomials.end(), laymono_less);
  std::vector<LayMonomial> merged;
  for (auto &m : p.monomials) {
    if (!merged.empty() && merged.back().exps == m.exps)
      merged.back().coeff = l_add(merged.back().coeff, m.coeff);
    else
      merged.push_back(std::move(m));
  }
  p.monomials = std::move(merged);
  return p;
}

LayPoly lay_const(const LayerElem &c) {
  return LayPoly{c.kind, {LayMonomial{{}, c}}};
}

LayPoly lay_add(const LayPoly &a, const LayPoly &b) {
  LayPoly r = a;
  r.monomials.insert(r.monomials.end(), b.monomials.begin(),
                     b.monomials.end());
  return lay_canonical(std::move(r));
}

LayPoly lay_mul(const LayPoly &a, const LayPoly &b) {
  if (a.monomials.size() * b.monomials.size() > kExpansionGuard)
    throw cap_error("layer monomials in expansion", kExpansionGuard);
  LayPoly r{a.kind, {}};
  for (const auto &ma : a.monomials)
    for (const auto &mb : b.monomials) {
      LayMonomial m = ma;
      add_exps(m.exps, mb.exps);
      m.coeff = l_mul(ma.coeff, mb.coeff);
      r.monomials.push_back(std::move(m));
    }
  return lay_canonical(std::move(r));
}

LayPoly lay_of_monomial(const Monomial &m) {
  LayMonomial lm{m.p2_exps, m.layer};
  return LayPoly{m.layer.kind, {std::move(lm)}};
}

LayerElem eval_lay(const LayPoly &p,
                   const std::map<std::string, LayerElem> &layers) {
  if (p.empty())
    throw std::logic_error("empty layer poly has no value in L");
  std::optional<LayerElem> acc;
  for (const auto &m : p.monomials) {
    LayerElem t = m.coeff;
    for (const auto &[v, e] : m.exps) {
      auto it = layers.find(v);
      if (it == layers.end())
        throw eval_error("unbound layer variable " + v);
      t = l_mul(t, l_pow(it->second, to_ulong_exp(e)));
    }
    acc = acc ? l_add(*acc, t) : t;
  }
  return *acc;
}

std::set<std::string> lay_vars(const LayPoly &p) {
  std::set<std::string> out;
  for (const auto &m : p.monomials)
    for (const auto &[v, e] : m.exps)
      out.insert(v);
  return out;
}

Int lay_degree_in(const LayPoly &p, const std::string &var) {
  Int d = 0;
  for (const auto &m : p.monomials) {
    auto it = m.exps.find(var);
    if (it != m.exps.end())
      d = std::max(d, it->second);
  }
  return d;
}

void lay_cancel(LayPoly &a, LayPoly &b) {
  if (a.kind == LayerKind::Trivial)
    return; // not additively cancellative
  LayPoly na{a.kind, {}}, nb{b.kind, {}};
  auto ia = a.monomials.begin();
  auto ib = b.monomials.begin();
  while (ia != a.monomials.end() && ib != b.monomials.end()) {
    if (ia->exps == ib->exps) {
      // shared shape: keep only the coefficient difference on the larger side
      Ordering c = l_cmp(ia->coeff, ib->coeff);
      if (c == Ordering::GT)
        na.monomials.push_back(
            LayMonomial{ia->exps, LayerElem{a.kind, ia->coeff.v - ib->coeff.v}});
      else if (c == Ordering::LT)
        nb.monomials.push_back(
            LayMonomial{ib->exps, LayerElem{b.kind, ib->coeff.v - ia->coeff.v}});
      ++ia;
      ++ib;
    } else if (ia->exps < ib->exps) {
      na.monomials.push_back(*ia++);
    } else {
      nb.monomials.push_back(*ib++);
    }
  }
  na.monomials.insert(na.monomials.end(), ia, a.monomials.end());
  nb.monomials.insert(nb.monomials.end(), ib, b.monomials.end());
  a = std::move(na);
  b = std::move(nb);
}

LayPoly lay_substitute(const LayPoly &p, const std::string &var,
                       const LayPoly &repl) {
  LayPoly out{p.kind, {}};
  for (const auto &m : p.monomials) {
    LayMonomial base = m;
    Int e = 0;
    auto it = base.exps.find(var);
    if (it != base.exps.end()) {
      e = it->second;
      base.exps.erase(it);
    }
    LayPoly term{p.kind, {base}};
    for (unsigned long i = 0; i < to_ulong_exp(e); ++i)
      term = lay_mul(term, repl);
    out = lay_add(out, term);
  }
  return out;
}

bool lay_to_univariate(const LayPoly &p, const std::string &var,
                       LayerPoly &out) {
  out = LayerPoly{p.kind, {}};
  for (const auto &m : p.monomials) {
    Int deg = 0;
    for (const auto &[v, e] : m.exps) {
      if (v != var)
        return false;
      deg = e;
    }
    unsigned d = static_cast<unsigned>(to_ulong_exp(deg));
    auto it = out.coeffs.find(d);
    if (it == out.coeffs.end())
      out.coeffs.emplace(d, m.coeff);
    else
      it->second = l_add(it->second, m.coeff);
  }
  return true;
}

std::string lay_to_string(const LayPoly &p) {
  if (p.empty())
    return "(empty)";
  std::ostringstream os;
  bool first = true;
  for (const auto &m : p.monomials) {
    if (!first)
      os << " + ";
    first = false;
    os << layer_to_string(m.coeff);
    for (const auto &[v, e] : m.exps)
      os << "*p2(" << v << ")" << (e == 1 ? "" : "^" + e.str());
  }
  return os.str();
}

// ---------------------------------------------------------------------------

LinAtom lin_canonical(LinAtom a) {
  for (auto it = a.coeffs.begin(); it != a.coeffs.end();)
    it = it->second == 0 ? a.coeffs.erase(it) : std::next(it);
  if (a.coeffs.empty())
    return a;
  Int g = 0;
  for (const auto &[v, n] : a.coeffs)
    g = boost::multiprecision::gcd(g, n);
  if (g > 1) {
    for (auto &[v, n] : a.coeffs)
      n /= g;
    a.constant /= Rat(g);
  }
  if (a.rel == LinRel::Eq && a.coeffs.begin()->second < 0) {
    for (auto &[v, n] : a.coeffs)
      n = -n;
    a.constant = -a.constant;
  }
  return a;
}

bool lin_ground_truth(const LinAtom &a) {
  switch (a.rel) {
  case LinRel::Eq:
    return a.constant == 0;
  case LinRel::Lt:
    return Rat(0) < a.constant;
  case LinRel::Le:
    return Rat(0) <= a.constant;
  }
  return false;
}

bool eval_lin(const LinAtom &a, const std::map<std::string, Rat> &vals) {
  Rat lhs = 0;
  for (const auto &[v, n] : a.coeffs) {
    auto it = vals.find(v);
    if (it == vals.end())
      throw eval_error("unbound variable " + v);
    lhs += Rat(n) * it->second;
  }
  switch (a.rel) {
  case LinRel::Eq:
    return lhs == a.constant;
  case LinRel::Lt:
    return lhs < a.constant;
  case LinRel::Le:
    return lhs <= a.constant;
  }
  return false;
}

std::string lin_to_string(const LinAtom &a) {
  std::ostringstream os;
  if (a.coeffs.empty())
    os << "0";
  bool first = true;
  for (const auto &[v, n] : a.coeffs) {
    if (!first)
      os << " + ";
    first = false;
    if (n != 1)
      os << n.str() << "*";
    os << "p1(" << v << ")";
  }
  os << (a.rel == LinRel::Eq ? " = " : a.rel == LinRel::Lt ? " < " : " <= ");
  os << rat_to_string(a.constant);
  return os.str();
}

} // namespace layered
