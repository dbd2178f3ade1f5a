// SPDX-License-Identifier: Apache-2.0
#include "layered/linear.hpp"

#include <algorithm>
#include <set>

namespace layered {

bool lin_add_atom(LinSystem &sys, LinAtom a) {
  a = lin_canonical(std::move(a));
  if (a.is_ground())
    return lin_ground_truth(a); // true atoms vanish
  if (std::find(sys.atoms.begin(), sys.atoms.end(), a) == sys.atoms.end())
    sys.atoms.push_back(std::move(a));
  return true;
}

static Int coeff_of(const LinAtom &a, const std::string &var) {
  auto it = a.coeffs.find(var);
  return it == a.coeffs.end() ? Int(0) : it->second;
}

// atom with `var` eliminated through the equation eq (coefficient m != 0)
static LinAtom substitute_eq(const LinAtom &atom, const LinAtom &eq,
                             const std::string &var) {
  Int m = coeff_of(eq, var);
  Int n = coeff_of(atom, var);
  Int mabs = abs(m);
  Int msgn = m > 0 ? 1 : -1;
  LinAtom out;
  out.rel = atom.rel;
  for (const auto &[v, c] : atom.coeffs)
    if (v != var)
      out.coeffs[v] = c * mabs;
  for (const auto &[v, c] : eq.coeffs)
    if (v != var) {
      Int &slot = out.coeffs[v];
      slot -= n * msgn * c;
      if (slot == 0)
        out.coeffs.erase(v);
    }
  out.constant = atom.constant * Rat(mabs) - Rat(n * msgn) * eq.constant;
  return lin_canonical(std::move(out));
}

// cross condition "lower bound < upper bound" for a pair of bounds on var
static LinAtom cross_pair(const LinAtom &lower, const LinAtom &upper,
                          const std::string &var) {
  Int ml = coeff_of(lower, var); // < 0
  Int mu = coeff_of(upper, var); // > 0
  LinAtom out;
  out.rel = (lower.rel == LinRel::Le && upper.rel == LinRel::Le) ? LinRel::Le
                                                                 : LinRel::Lt;
  for (const auto &[v, c] : lower.coeffs)
    if (v != var)
      out.coeffs[v] = c * mu;
  for (const auto &[v, c] : upper.coeffs)
    if (v != var) {
      Int &slot = out.coeffs[v];
      slot -= ml * c;
      if (slot == 0)
        out.coeffs.erase(v);
    }
  out.constant = Rat(mu) * lower.constant - Rat(ml) * upper.constant;
  return lin_canonical(std::move(out));
}

std::optional<LinSystem> lin_eliminate(const LinSystem &sys,
                                       const std::string &var) {
  std::vector<LinAtom> with, without;
  for (const auto &a : sys.atoms)
    (coeff_of(a, var) != 0 ? with : without).push_back(a);

  LinSystem out;
  for (auto &a : without)
    if (!lin_add_atom(out, std::move(a)))
      return std::nullopt;
  if (with.empty())
    return out;

  const LinAtom *eq = nullptr;
  for (const auto &a : with)
    if (a.rel == LinRel::Eq) {
      if (!eq || abs(coeff_of(a, var)) < abs(coeff_of(*eq, var)) ||
          (abs(coeff_of(a, var)) == abs(coeff_of(*eq, var)) && a < *eq))
        eq = &a;
    }
  if (eq) {
    for (const auto &a : with) {
      if (&a == eq)
        continue; // the equation itself is solvable: Q is divisible
      if (!lin_add_atom(out, substitute_eq(a, *eq, var)))
        return std::nullopt;
    }
    return out;
  }

  std::vector<const LinAtom *> lowers, uppers;
  for (const auto &a : with)
    (coeff_of(a, var) < 0 ? lowers : uppers).push_back(&a);
  for (const auto *lo : lowers)
    for (const auto *up : uppers)
      if (!lin_add_atom(out, cross_pair(*lo, *up, var)))
        return std::nullopt;
  return out;
}

static std::set<std::string> system_vars(const LinSystem &sys) {
  std::set<std::string> vars;
  for (const auto &a : sys.atoms)
    for (const auto &[v, c] : a.coeffs)
      vars.insert(v);
  return vars;
}

bool lin_feasible(const LinSystem &sys) {
  LinSystem cur;
  for (const auto &a : sys.atoms)
    if (!lin_add_atom(cur, a))
      return false;
  for (const auto &v : system_vars(cur)) {
    auto next = lin_eliminate(cur, v);
    if (!next)
      return false;
    cur = std::move(*next);
  }
  return true;
}

std::optional<std::map<std::string, Rat>> lin_witness(const LinSystem &sys) {
  LinSystem cur;
  for (const auto &a : sys.atoms)
    if (!lin_add_atom(cur, a))
      return std::nullopt;
  std::vector<std::pair<std::string, LinSystem>> states;
  for (const auto &v : system_vars(cur)) {
    states.emplace_back(v, cur);
    auto next = lin_eliminate(cur, v);
    if (!next)
      return std::nullopt;
    cur = std::move(*next);
  }

  std::map<std::string, Rat> vals;
  for (auto it = states.rbegin(); it != states.rend(); ++it) {
    const auto &[var, st] = *it;
    std::optional<Rat> eqv;
    std::optional<Rat> lo, up;
    bool lo_strict = false, up_strict = false;
    for (const auto &a : st.atoms) {
      Int m = coeff_of(a, var);
      if (m == 0)
        continue;
      Rat rest = a.constant;
      for (const auto &[v, c] : a.coeffs)
        if (v != var)
          rest -= Rat(c) * vals.at(v);
      Rat bound = rest / Rat(m);
      if (a.rel == LinRel::Eq) {
        eqv = bound;
      } else if (m > 0) {
        if (!up || bound < *up || (bound == *up && a.rel == LinRel::Lt)) {
          up = bound;
          up_strict = a.rel == LinRel::Lt;
        }
      } else {
        if (!lo || bound > *lo || (bound == *lo && a.rel == LinRel::Lt)) {
          lo = bound;
          lo_strict = a.rel == LinRel::Lt;
        }
      }
    }
    Rat pick;
    if (eqv) {
      pick = *eqv;
    } else if (lo && up) {
      pick = *lo == *up ? *lo : (*lo + *up) / 2;
    } else if (lo) {
      pick = *lo + 1;
    } else if (up) {
      pick = *up - 1;
    } else {
      pick = 0;
    }
    (void)lo_strict;
    (void)up_strict;
    vals[var] = pick;
  }
  return vals;
}

} // namespace layered
