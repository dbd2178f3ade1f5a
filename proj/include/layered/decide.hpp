// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "layered/axioms.hpp"

namespace layered {

/// Truth of a closed formula in the canonical model, which settles the
/// theory's verdict by completeness. Quantifiers are removed first; throws
/// unsupported_error outside the implemented fragment and
/// std::invalid_argument on free variables.
bool decide_sentence(const Formula &f, const CanonicalModel &model,
                     const Caps &caps = {}, const ExecPolicy &exec = {});

struct PolyEqResult {
  bool equal = false;
  std::optional<Assignment> counterexample; // first failing sample when found
};

/// Decides whether two polynomial terms agree on every assignment (the
/// universal closure of p = q). On a negative verdict the counterexample is
/// the first failing assignment from a deterministic stream: tie-heavy
/// corner points first, then seeded random samples.
PolyEqResult poly_equal(const Term &p, const Term &q,
                        const CanonicalModel &model, const Caps &caps = {},
                        std::uint64_t seed = 0, std::size_t samples = 10000,
                        const ExecPolicy &exec = {});

} // namespace layered
