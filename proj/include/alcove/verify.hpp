#pragma once

#include <string>
#include <vector>

#include "alcove/affine.hpp"
#include "alcove/fusion.hpp"
#include "alcove/regparts.hpp"

namespace alcove {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail; // first counterexample when not ok
};

/// Round trip reduce(dot_act(x, lambda)) = (x, lambda) over the length ball,
/// with sign = (-1)^length throughout.
CheckResult check_roundtrip(const EllContext& ctx, Coord max_len);

/// Hyperplane-separation length against BFS word length on the ball.
CheckResult check_length_agreement(const EllContext& ctx, Coord max_len);

/// fusion_row == fusion_row_racah on every pair of alcove weights.
CheckResult check_two_formulas(const EllContext& ctx);

/// Omega-equivariance of the structure constants, including the twisted
/// identity on all triples and the rows against omega . 0.
CheckResult check_omega_equivariance(const EllContext& ctx, const FusionTable& table);

/// The dominant folding of w0(lambda) + mu lands in the alcove with a
/// nonzero coefficient, for every pair.
CheckResult check_nonvanishing(const EllContext& ctx, const FusionTable& table);

/// Commutativity, unit row and associativity of the fusion table.  The
/// associativity sweep is quartic in the alcove size; assoc_limit caps the
/// number of weights it ranges over (0 = all of them).
CheckResult check_ring_axioms(const EllContext& ctx, const FusionTable& table,
                              std::size_t assoc_limit = 0);

/// The A2 example rows: generic summands for (s0,s0), the two Frobenius
/// patterns, blockwise linkage, and Omega-twist coherence of the engine.
CheckResult check_a2_golden(const EllContext& ctx, const PrincipalFusionRule& rules,
                            const FusionTable& table);

/// Everything applicable to the context, in order.
std::vector<CheckResult> run_verification(const EllContext& ctx);

} // namespace alcove
