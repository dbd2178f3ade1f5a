// SPDX-License-Identifier: Apache-2.0
//
// Layering semirings: the sort the pi2 projection lands in. Three concrete
// instances are provided: the trivial idempotent semiring {1}, the naturals
// >= 1, and the positive rationals. All are ordered, cancellative and have
// no zero element.
#pragma once

#include "layered/common.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace layered {

enum class LayerKind { Trivial, Nat, PosRat };

/// An element of the active layering semiring. Stored as an exact rational;
/// Nat elements keep denominator 1, Trivial elements are always 1.
struct LayerElem {
  LayerKind kind = LayerKind::Trivial;
  Rat v = 1;

  bool operator==(const LayerElem &o) const = default;
};

enum class Ordering { LT, EQ, GT };

LayerElem l_add(const LayerElem &a, const LayerElem &b);
LayerElem l_mul(const LayerElem &a, const LayerElem &b);
Ordering l_cmp(const LayerElem &a, const LayerElem &b);
LayerElem l_pow(const LayerElem &a, unsigned n);

/// k-fold sum a + ... + a (k >= 1). Collapses to a for the trivial semiring.
LayerElem l_scale(unsigned long k, const LayerElem &a);

/// Univariate layer polynomial: degree -> coefficient, every coefficient an
/// element of the semiring (multiplicities are already folded in, which is
/// lossless since N.L' is a subset of L for all three instances).
struct LayerPoly {
  LayerKind kind = LayerKind::Trivial;
  std::map<unsigned, LayerElem> coeffs; // no absent-degree entries

  LayerElem eval(const LayerElem &x) const;
  bool operator==(const LayerPoly &o) const = default;
};

struct LayerSolveResult {
  enum class Tag { Sat, Unsat, Unsupported } tag = Tag::Unsat;
  std::optional<LayerElem> witness; // set iff Sat
  std::string reason;               // set iff Unsupported

  static LayerSolveResult sat(LayerElem w) {
    return {Tag::Sat, std::move(w), {}};
  }
  static LayerSolveResult unsat() { return {Tag::Unsat, std::nullopt, {}}; }
  static LayerSolveResult unsupported(std::string why) {
    return {Tag::Unsupported, std::nullopt, std::move(why)};
  }
};

/// Decides whether some y in L satisfies every r(y) = s(y) and every
/// p(y) != q(y). Complete for the three built-in semirings with ground
/// coefficients: root candidates are enumerated from a Cauchy bound over N
/// and by the rational-root theorem over Q>0.
LayerSolveResult
solve_layer_system(const std::vector<std::pair<LayerPoly, LayerPoly>> &eqs,
                   const std::vector<std::pair<LayerPoly, LayerPoly>> &diseqs);

/// All solutions of a system of ground univariate layer equations; nullopt
/// when every equation has identically zero difference (no constraint).
std::optional<std::vector<LayerElem>> layer_equation_solutions(
    const std::vector<std::pair<LayerPoly, LayerPoly>> &eqs);

/// Descriptor for the active semiring; owns parsing/printing of layer
/// literals and the subtraction query the surpasses relation needs.
class LayerSemiring {
public:
  explicit LayerSemiring(LayerKind kind) : kind_(kind) {}
  static LayerSemiring trivial() { return LayerSemiring(LayerKind::Trivial); }
  static LayerSemiring naturals() { return LayerSemiring(LayerKind::Nat); }
  static LayerSemiring positive_rationals() {
    return LayerSemiring(LayerKind::PosRat);
  }

  LayerKind kind() const { return kind_; }
  LayerElem one() const { return LayerElem{kind_, 1}; }

  /// Validates and builds an element; throws std::domain_error for values
  /// outside the semiring (zero, negatives, non-integers over Nat).
  LayerElem make(const Rat &v) const;

  /// Exact answer to "is there lambda in L with a + lambda = b".
  std::optional<LayerElem> subtract(const LayerElem &a,
                                    const LayerElem &b) const;

  std::string name() const;
  std::string print(const LayerElem &e) const;

  /// Parses a layer literal per the active semiring; nullopt on bad syntax.
  std::optional<LayerElem> parse(const std::string &text) const;

  bool operator==(const LayerSemiring &o) const = default;

private:
  LayerKind kind_;
};

std::string layer_to_string(const LayerElem &e);

} // namespace layered
