// SPDX-License-Identifier: Apache-2.0
//
// Machine-readable axiom suites for the theory of layered semidomains (ld)
// and of divisibly closed layered 1-semifields (dlsf), plus their
// layering-annotated variants. The divisibility schema is instantiated for
// n = 2..n_max; the elementary diagram of L is represented by the concrete
// computable semiring rather than as sentences.
#pragma once

#include "layered/qe.hpp"
#include "layered/sample.hpp"

namespace layered {

enum class TheoryKind { LD, LDL, DLSF, DLSFL };

TheoryKind theory_kind_from_string(const std::string &s); // "ld", "ld-l", ...
std::string theory_kind_name(TheoryKind k);

/// How an axiom is discharged during checking: plain evaluation, witness
/// construction for the existential axioms, or the layer-order trichotomy
/// (the pi2-sort totality, which the element order cannot state).
enum class WitnessKind {
  None,
  Pi1Inverse,
  NthRoot,
  Nontrivial,
  LayerOrderTotal
};

struct Axiom {
  std::string id;
  Formula sentence;
  bool universal = true;
  WitnessKind witness = WitnessKind::None;
  unsigned root_n = 0; // NthRoot only
  /// whether the sentence field is a faithful statement in the element
  /// interpretation; false only for the pi2 order totality over a
  /// nontrivial layering, whose content is the layer order itself
  bool element_faithful = true;
};

struct AxiomSuite {
  TheoryKind kind;
  LayerSemiring layering;
  std::vector<Axiom> axioms;

  const Axiom *find(const std::string &id) const;
};

AxiomSuite axiom_suite(TheoryKind kind, const LayerSemiring &sr,
                       unsigned n_max = 5);

struct AxiomResult {
  std::string id;
  bool pass = true;
  std::string counterexample; // first failing assignment, verbatim
};

struct CheckReport {
  std::vector<AxiomResult> results;
  bool all_pass() const;
};

/// Samples every universal sentence and discharges existential axioms by
/// constructing their witnesses. Deterministic in (suite, samples, seed);
/// the parallel path fans samples out and reports the earliest failure.
CheckReport check_axioms(const AxiomSuite &suite, std::size_t samples,
                         std::uint64_t seed, const ExecPolicy &exec = {});

std::string report_text(const CheckReport &r);
std::string report_json(const CheckReport &r);

} // namespace layered
