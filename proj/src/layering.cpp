// SPDX-License-Identifier: Apache-2.0
#include "layered/layering.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace layered {

std::string rat_to_string(const Rat &q) {
  std::string s = rat_num(q).str();
  if (rat_den(q) != 1)
    s += "/" + rat_den(q).str();
  return s;
}

static void require_same(const LayerElem &a, const LayerElem &b) {
  if (a.kind != b.kind)
    throw std::logic_error("layer elements from different semirings");
}

LayerElem l_add(const LayerElem &a, const LayerElem &b) {
  require_same(a, b);
  if (a.kind == LayerKind::Trivial)
    return a; // 1 + 1 = 1
  return LayerElem{a.kind, a.v + b.v};
}

LayerElem l_mul(const LayerElem &a, const LayerElem &b) {
  require_same(a, b);
  if (a.kind == LayerKind::Trivial)
    return a;
  return LayerElem{a.kind, a.v * b.v};
}

Ordering l_cmp(const LayerElem &a, const LayerElem &b) {
  require_same(a, b);
  if (a.v < b.v)
    return Ordering::LT;
  if (a.v == b.v)
    return Ordering::EQ;
  return Ordering::GT;
}

LayerElem l_pow(const LayerElem &a, unsigned n) {
  LayerElem r{a.kind, 1};
  for (unsigned i = 0; i < n; ++i)
    r = l_mul(r, a);
  return r;
}

LayerElem l_scale(unsigned long k, const LayerElem &a) {
  assert(k >= 1);
  if (a.kind == LayerKind::Trivial)
    return a;
  return LayerElem{a.kind, Rat(k) * a.v};
}

LayerElem LayerPoly::eval(const LayerElem &x) const {
  if (x.kind != kind)
    throw std::logic_error("layer poly evaluated in wrong semiring");
  std::optional<LayerElem> acc;
  for (const auto &[deg, c] : coeffs) {
    LayerElem term = l_mul(c, l_pow(x, deg));
    acc = acc ? l_add(*acc, term) : term;
  }
  if (!acc)
    throw std::logic_error("empty layer poly has no value in L");
  return *acc;
}

// Difference r - s as a dense rational coefficient vector (index = degree).
static std::vector<Rat> diff_coeffs(const LayerPoly &r, const LayerPoly &s) {
  unsigned deg = 0;
  if (!r.coeffs.empty())
    deg = std::max(deg, r.coeffs.rbegin()->first);
  if (!s.coeffs.empty())
    deg = std::max(deg, s.coeffs.rbegin()->first);
  std::vector<Rat> d(deg + 1, Rat(0));
  for (const auto &[k, c] : r.coeffs)
    d[k] += c.v;
  for (const auto &[k, c] : s.coeffs)
    d[k] -= c.v;
  while (d.size() > 1 && d.back() == 0)
    d.pop_back();
  return d;
}

static bool is_zero_poly(const std::vector<Rat> &d) {
  return d.size() == 1 && d[0] == 0;
}

static Rat eval_rat_poly(const std::vector<Rat> &d, const Rat &x) {
  Rat acc = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

// Positive divisors of |n| by trial division. Inputs here come from small
// formula coefficients.
static std::vector<Int> divisors(Int n) {
  if (n < 0)
    n = -n;
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Candidate roots in the semiring of the rational-coefficient polynomial d.
// Over Nat: integers 1..CauchyBound. Over PosRat: rational-root-theorem
// candidates after clearing denominators and stripping powers of y.
static std::vector<Rat> root_candidates(LayerKind kind, std::vector<Rat> d) {
  std::vector<Rat> out;
  // strip y^k (y > 0 in all instances, so these factors never vanish)
  std::size_t first = 0;
  while (first < d.size() && d[first] == 0)
    ++first;
  d.erase(d.begin(), d.begin() + static_cast<long>(first));
  if (d.empty() || is_zero_poly(d))
    return out; // no finite root set
  if (d.size() == 1)
    return out; // nonzero constant: no roots
  if (kind == LayerKind::Nat) {
    Rat maxabs = 0;
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      maxabs = std::max(maxabs, Rat(abs(d[i])));
    Rat bound = 1 + maxabs / Rat(abs(d.back()));
    for (Int y = 1; Rat(y) <= bound; ++y)
      out.emplace_back(y);
    return out;
  }
  // PosRat: clear denominators to an integer polynomial.
  Int lcm = 1;
  for (const auto &c : d)
    lcm = boost::multiprecision::lcm(lcm, rat_den(c));
  std::vector<Int> ic;
  ic.reserve(d.size());
  for (const auto &c : d)
    ic.push_back(rat_num(c * Rat(lcm)));
  for (const Int &p : divisors(ic.front()))
    for (const Int &q : divisors(ic.back()))
      out.emplace_back(Rat(p, q));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LayerSolveResult
solve_layer_system(const std::vector<std::pair<LayerPoly, LayerPoly>> &eqs,
                   const std::vector<std::pair<LayerPoly, LayerPoly>> &diseqs) {
  LayerKind kind = LayerKind::Trivial;
  bool have = false;
  for (const auto &sys : {eqs, diseqs})
    for (const auto &[l, r] : sys) {
      if (have && (l.kind != kind || r.kind != kind))
        throw std::logic_error("mixed semirings in layer system");
      kind = l.kind;
      have = true;
    }

  auto satisfies = [&](const LayerElem &y) {
    for (const auto &[l, r] : eqs)
      if (!(l.eval(y) == r.eval(y)))
        return false;
    for (const auto &[l, r] : diseqs)
      if (l.eval(y) == r.eval(y))
        return false;
    return true;
  };

  if (!have || kind == LayerKind::Trivial) {
    LayerElem one{kind, 1};
    return satisfies(one) ? LayerSolveResult::sat(one)
                          : LayerSolveResult::unsat();
  }

  // Equations with a non-identically-zero difference pin y to finitely many
  // candidates; otherwise scan small elements past every disequation's root
  // set (nonzero difference polynomials have at most deg roots).
  std::optional<std::vector<Rat>> candidates;
  unsigned diseq_degrees = 0;
  for (const auto &[l, r] : eqs) {
    auto d = diff_coeffs(l, r);
    if (is_zero_poly(d))
      continue;
    auto roots = root_candidates(kind, d);
    if (!candidates) {
      candidates = std::move(roots);
    } else {
      std::vector<Rat> inter;
      std::set<Rat> keep(roots.begin(), roots.end());
      for (const auto &c : *candidates)
        if (keep.count(c))
          inter.push_back(c);
      *candidates = std::move(inter);
    }
  }
  for (const auto &[l, r] : diseqs) {
    auto d = diff_coeffs(l, r);
    if (is_zero_poly(d))
      return LayerSolveResult::unsat(); // p(y) = q(y) identically
    diseq_degrees += static_cast<unsigned>(d.size());
  }

  if (!candidates) {
    for (Int y = 1; y <= Int(diseq_degrees) + 1; ++y) {
      LayerElem e{kind, Rat(y)};
      if (satisfies(e))
        return LayerSolveResult::sat(e);
    }
    return LayerSolveResult::unsat();
  }

  for (const Rat &c : *candidates) {
    if (c <= 0)
      continue;
    if (kind == LayerKind::Nat && rat_den(c) != 1)
      continue;
    // exclude non-roots among rational-root-theorem candidates
    bool all_eqs = true;
    for (const auto &[l, r] : eqs)
      if (eval_rat_poly(diff_coeffs(l, r), c) != 0) {
        all_eqs = false;
        break;
      }
    if (!all_eqs)
      continue;
    LayerElem e{kind, c};
    if (satisfies(e))
      return LayerSolveResult::sat(e);
  }
  return LayerSolveResult::unsat();
}

std::optional<std::vector<LayerElem>> layer_equation_solutions(
    const std::vector<std::pair<LayerPoly, LayerPoly>> &eqs) {
  if (eqs.empty())
    return std::nullopt;
  LayerKind kind = eqs.front().first.kind;

  auto eq_holds = [&](const LayerElem &y) {
    for (const auto &[l, r] : eqs)
      if (eval_rat_poly(diff_coeffs(l, r), y.v) != 0)
        return false;
    return true;
  };

  if (kind == LayerKind::Trivial) {
    LayerElem one{kind, 1};
    std::vector<LayerElem> out;
    if (eq_holds(one))
      out.push_back(one);
    return out;
  }

  std::optional<std::vector<Rat>> candidates;
  for (const auto &[l, r] : eqs) {
    auto d = diff_coeffs(l, r);
    if (is_zero_poly(d))
      continue;
    auto roots = root_candidates(kind, d);
    if (!candidates) {
      candidates = std::move(roots);
    } else {
      std::set<Rat> keep(roots.begin(), roots.end());
      std::vector<Rat> inter;
      for (const auto &c : *candidates)
        if (keep.count(c))
          inter.push_back(c);
      *candidates = std::move(inter);
    }
  }
  if (!candidates)
    return std::nullopt;
  std::vector<LayerElem> out;
  for (const Rat &c : *candidates) {
    if (c <= 0 || (kind == LayerKind::Nat && rat_den(c) != 1))
      continue;
    LayerElem y{kind, c};
    if (eq_holds(y))
      out.push_back(y);
  }
  return out;
}

LayerElem LayerSemiring::make(const Rat &v) const {
  switch (kind_) {
  case LayerKind::Trivial:
    if (v != 1)
      throw std::domain_error("trivial layering has only the element 1");
    break;
  case LayerKind::Nat:
    if (v < 1 || rat_den(v) != 1)
      throw std::domain_error("layer must be a natural number >= 1");
    break;
  case LayerKind::PosRat:
    if (v <= 0)
      throw std::domain_error("layer must be a positive rational");
    break;
  }
  return LayerElem{kind_, v};
}

std::optional<LayerElem> LayerSemiring::subtract(const LayerElem &a,
                                                 const LayerElem &b) const {
  switch (kind_) {
  case LayerKind::Trivial:
    return one(); // 1 + 1 = 1
  case LayerKind::Nat: {
    Rat d = b.v - a.v;
    if (d >= 1 && rat_den(d) == 1)
      return LayerElem{kind_, d};
    return std::nullopt;
  }
  case LayerKind::PosRat: {
    Rat d = b.v - a.v;
    if (d > 0)
      return LayerElem{kind_, d};
    return std::nullopt;
  }
  }
  return std::nullopt;
}

std::string LayerSemiring::name() const {
  switch (kind_) {
  case LayerKind::Trivial:
    return "trivial";
  case LayerKind::Nat:
    return "nat";
  case LayerKind::PosRat:
    return "posrat";
  }
  return "?";
}

std::string layer_to_string(const LayerElem &e) { return rat_to_string(e.v); }

std::string LayerSemiring::print(const LayerElem &e) const {
  return layer_to_string(e);
}

std::optional<LayerElem> LayerSemiring::parse(const std::string &text) const {
  // layer literals: "1" (trivial), decimal naturals (nat), "p" or "p/q"
  // (posrat); no sign.
  std::size_t i = 0;
  auto digits = [&]() -> std::optional<Int> {
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9')
      ++i;
    if (i == start)
      return std::nullopt;
    return int_from_digits(text.substr(start, i - start));
  };
  auto p = digits();
  if (!p)
    return std::nullopt;
  Rat v(*p);
  if (i < text.size() && text[i] == '/') {
    if (kind_ != LayerKind::PosRat)
      return std::nullopt;
    ++i;
    auto q = digits();
    if (!q || *q == 0)
      return std::nullopt;
    v = Rat(*p, *q);
  }
  if (i != text.size())
    return std::nullopt;
  try {
    return make(v);
  } catch (const std::domain_error &) {
    return std::nullopt;
  }
}

} // namespace layered
