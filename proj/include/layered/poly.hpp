// SPDX-License-Identifier: Apache-2.0
//
// Canonical polynomial forms. A term over the two-sorted language expands to
// a sum of monomials over the projected variables: each monomial carries a
// layer coefficient (in L), a rational value offset (from ground literals;
// logarithmic notation, so the offset adds), and exponent maps for the
// pi1- and pi2-projections of the source variables.
#pragma once

#include "layered/core.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace layered {

struct Monomial {
  std::map<std::string, Int> p1_exps; // pi1(var) exponents, no zeros stored
  std::map<std::string, Int> p2_exps; // pi2(var) exponents, no zeros stored
  LayerElem layer;                    // coefficient in N.L' folded into L
  Rat value = 0;                      // coefficient value offset

  bool same_shape(const Monomial &o) const {
    return p1_exps == o.p1_exps && p2_exps == o.p2_exps && value == o.value;
  }
  bool operator==(const Monomial &o) const = default;
};

/// Sum of monomials in canonical order; the empty sum is the zero element.
struct PolyNF {
  LayerKind kind = LayerKind::Trivial;
  std::vector<Monomial> monomials;

  bool is_zero() const { return monomials.empty(); }
  bool operator==(const PolyNF &o) const = default;
};

PolyNF poly_zero(LayerKind kind);
PolyNF poly_const(const LayeredElem &c);
PolyNF poly_var(LayerKind kind, const std::string &name);
PolyNF poly_proj1_var(LayerKind kind, const std::string &name);
PolyNF poly_proj2_var(LayerKind kind, const std::string &name);
PolyNF poly_add(const PolyNF &a, const PolyNF &b);
PolyNF poly_mul(const PolyNF &a, const PolyNF &b);
PolyNF poly_pow(const PolyNF &a, const Int &n);
PolyNF poly_canonical(PolyNF p);

LayeredElem eval_monomial(const Monomial &m,
                          const std::map<std::string, LayeredElem> &sigma);
LayeredElem eval_poly(const PolyNF &p,
                      const std::map<std::string, LayeredElem> &sigma);

std::set<std::string> poly_vars(const PolyNF &p);
std::string poly_to_string(const PolyNF &p);

// ---------------------------------------------------------------------------
// pi2-sort polynomials: multivariate with coefficients in L.

struct LayMonomial {
  std::map<std::string, Int> exps; // pi2(var) exponents, no zeros stored
  LayerElem coeff;

  bool operator==(const LayMonomial &o) const = default;
};

struct LayPoly {
  LayerKind kind = LayerKind::Trivial;
  std::vector<LayMonomial> monomials; // canonical order, merged

  bool empty() const { return monomials.empty(); }
  bool operator==(const LayPoly &o) const = default;
};

LayPoly lay_const(const LayerElem &c);
LayPoly lay_add(const LayPoly &a, const LayPoly &b);
LayPoly lay_mul(const LayPoly &a, const LayPoly &b);
LayPoly lay_canonical(LayPoly p);

/// The pi2 part of a value-side monomial: coefficient layer times the
/// product of pi2(var)^exp factors.
LayPoly lay_of_monomial(const Monomial &m);

LayerElem eval_lay(const LayPoly &p,
                   const std::map<std::string, LayerElem> &layers);

std::set<std::string> lay_vars(const LayPoly &p);
Int lay_degree_in(const LayPoly &p, const std::string &var);

/// Removes the shared part of two layer polynomials (per monomial shape, the
/// smaller coefficient). Valid over the additively cancellative instances
/// (Nat, PosRat); never called for the trivial semiring, which collapses
/// earlier.
void lay_cancel(LayPoly &a, LayPoly &b);

/// Substitutes a polynomial for a variable (used when an equation pins
/// pi2(w) to a w-free polynomial).
LayPoly lay_substitute(const LayPoly &p, const std::string &var,
                       const LayPoly &repl);

/// View as univariate in `var` if no other variable occurs and every
/// coefficient is ground; returns false otherwise.
bool lay_to_univariate(const LayPoly &p, const std::string &var,
                       LayerPoly &out);

std::string lay_to_string(const LayPoly &p);

// ---------------------------------------------------------------------------
// pi1-sort linear atoms, normalized as sum(n_i * pi1(v_i)) rel c with
// integer coefficients in lowest terms and an exact rational constant.

enum class LinRel { Eq, Lt, Le }; // Le is internal to feasibility checks

struct LinAtom {
  std::map<std::string, Int> coeffs; // no zero coefficients stored
  Rat constant = 0;
  LinRel rel = LinRel::Eq;

  bool is_ground() const { return coeffs.empty(); }
  bool operator==(const LinAtom &o) const = default;
  bool operator<(const LinAtom &o) const {
    if (rel != o.rel)
      return rel < o.rel;
    if (coeffs != o.coeffs)
      return coeffs < o.coeffs;
    return constant < o.constant;
  }
};

/// Divides through by the gcd of the coefficients; for equations also fixes
/// the sign of the leading coefficient. Ground atoms are left for the caller
/// to fold.
LinAtom lin_canonical(LinAtom a);

/// Truth of a ground atom (coeffs empty).
bool lin_ground_truth(const LinAtom &a);

/// Evaluates at rational values for every mentioned variable; the pipeline
/// guarantees non-bottom values wherever these atoms appear.
bool eval_lin(const LinAtom &a, const std::map<std::string, Rat> &vals);

std::string lin_to_string(const LinAtom &a);

} // namespace layered
