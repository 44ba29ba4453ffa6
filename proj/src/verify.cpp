#include "alcove/verify.hpp"

#include <sstream>

#include "alcove/checked.hpp"

namespace alcove {

namespace {

std::string triple(const Weight& a, const Weight& b, const Weight& c) {
    return "(" + a.str() + "), (" + b.str() + "), (" + c.str() + ")";
}

} // namespace

CheckResult check_roundtrip(const EllContext& ctx, Coord max_len) {
    CheckResult res{"reduce/dot_act round trip", true, ""};
    for (const auto& [x, len] : ctx.enumerate_ball(max_len)) {
        for (const Weight& lambda : ctx.alcove_weights()) {
            const Weight tau = ctx.dot_act(x, lambda);
            const ReductionResult red = ctx.reduce(tau);
            if (red.is_singular() || !(red.x == x) || !(red.lambda == lambda) ||
                red.length != ctx.length(x) || red.sign != (red.length % 2 == 0 ? 1 : -1)) {
                res.ok = false;
                res.detail = "failed at x of length " + std::to_string(len) + ", lambda = " +
                             lambda.str();
                return res;
            }
        }
    }
    return res;
}

CheckResult check_length_agreement(const EllContext& ctx, Coord max_len) {
    CheckResult res{"separation count vs BFS word length", true, ""};
    for (const auto& [x, len] : ctx.enumerate_ball(max_len)) {
        if (ctx.length(x) != len) {
            res.ok = false;
            res.detail = "element with word length " + std::to_string(len) +
                         " has separation count " + std::to_string(ctx.length(x));
            return res;
        }
        if (ctx.sign(x) != (len % 2 == 0 ? 1 : -1)) {
            res.ok = false;
            res.detail = "sign mismatch at word length " + std::to_string(len);
            return res;
        }
    }
    return res;
}

CheckResult check_two_formulas(const EllContext& ctx) {
    CheckResult res{"alternating sum vs classical folding", true, ""};
    for (const Weight& l : ctx.alcove_weights())
        for (const Weight& m : ctx.alcove_weights()) {
            if (fusion_row(ctx, l, m) != fusion_row_racah(ctx, l, m)) {
                res.ok = false;
                res.detail = "rows differ at (" + l.str() + "), (" + m.str() + ")";
                return res;
            }
        }
    return res;
}

CheckResult check_omega_equivariance(const EllContext& ctx, const FusionTable& table) {
    CheckResult res{"Omega-equivariance of fusion", true, ""};
    const auto& ws = ctx.alcove_weights();
    const Weight zero(static_cast<std::size_t>(ctx.rs().rank()));
    for (const auto& omega : ctx.omega_group()) {
        for (const Weight& l : ws) {
            // row against T(omega . 0) collapses to a single twisted entry
            const Weight om0 = ctx.dot_act(omega.elem, zero);
            const FusionRow row = table.row(l, om0);
            const Weight oml = ctx.dot_act(omega.elem, l);
            if (row.size() != 1 || row.begin()->first != oml || row.begin()->second != 1) {
                res.ok = false;
                res.detail = "T(" + l.str() + ") x T(" + om0.str() + ") is not T(" + oml.str() + ")";
                return res;
            }
            for (const Weight& m : ws)
                for (const Weight& n : ws) {
                    const std::int64_t lhs =
                        table.coeff(l, ctx.dot_act(omega.elem, m), ctx.dot_act(omega.elem, n));
                    const std::int64_t rhs = table.coeff(l, m, n);
                    if (lhs != rhs) {
                        res.ok = false;
                        res.detail = "twisted coefficient differs at " + triple(l, m, n);
                        return res;
                    }
                }
        }
    }
    return res;
}

CheckResult check_nonvanishing(const EllContext& ctx, const FusionTable& table) {
    CheckResult res{"nonvanishing of the dual-fold coefficient", true, ""};
    for (const Weight& l : ctx.alcove_weights())
        for (const Weight& m : ctx.alcove_weights()) {
            const Weight nu = ctx.rs().dominant_representative(ctx.rs().w0_image(l) + m).first;
            if (!ctx.in_fundamental_alcove(nu) || table.coeff(l, m, nu) < 1) {
                res.ok = false;
                res.detail = "vanishing at " + triple(l, m, nu);
                return res;
            }
        }
    return res;
}

CheckResult check_ring_axioms(const EllContext& ctx, const FusionTable& table,
                              std::size_t assoc_limit) {
    CheckResult res{"fusion ring axioms", true, ""};
    const auto& ws = ctx.alcove_weights();
    const Weight zero(static_cast<std::size_t>(ctx.rs().rank()));

    for (const Weight& m : ws) {
        const FusionRow unit = fusion_row(ctx, zero, m);
        if (unit.size() != 1 || unit.begin()->first != m || unit.begin()->second != 1) {
            res.ok = false;
            res.detail = "unit row fails at (" + m.str() + ")";
            return res;
        }
    }
    for (const Weight& l : ws)
        for (const Weight& m : ws)
            if (fusion_row(ctx, l, m) != fusion_row(ctx, m, l)) {
                res.ok = false;
                res.detail = "commutativity fails at (" + l.str() + "), (" + m.str() + ")";
                return res;
            }
    std::vector<Weight> span = ws;
    if (assoc_limit != 0 && span.size() > assoc_limit) span.resize(assoc_limit);
    for (const Weight& l : span)
        for (const Weight& m : span)
            for (const Weight& n : span)
                for (const Weight& t : ws) {
                    std::int64_t lhs = 0, rhs = 0;
                    for (const Weight& s : ws) {
                        lhs = checked_add(lhs, checked_mul(table.coeff(l, m, s), table.coeff(s, n, t)));
                        rhs = checked_add(rhs, checked_mul(table.coeff(m, n, s), table.coeff(l, s, t)));
                    }
                    if (lhs != rhs) {
                        res.ok = false;
                        res.detail = "associativity fails at " + triple(l, m, n) + " -> (" + t.str() + ")";
                        return res;
                    }
                }
    return res;
}

CheckResult check_a2_golden(const EllContext& ctx, const PrincipalFusionRule& rules,
                            const FusionTable& table) {
    CheckResult res{"A2 example rows", true, ""};
    const std::size_t n = 2;
    const Weight zero(n);
    auto word = [&](std::initializer_list<int> w) { return ctx.element_from_word(std::vector<int>(w)); };
    const ExtAffineElement e = ExtAffineElement::identity(n);
    const ExtAffineElement s0 = word({0});

    const auto& ws = ctx.alcove_weights();
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t k = i; k < ws.size(); ++k) {
            const Weight &l = ws[i], &m = ws[k];
            const RegObject got = regpart_tensor(ctx, rules, &table,
                                                 {LabelKind::Simple, "", s0, l, std::nullopt},
                                                 {LabelKind::Simple, "", s0, m, std::nullopt});
            RegObject want;
            for (const auto& [nu, c] : table.row(l, m)) {
                want.add(ObjLabel::custom(ctx, "M", e, nu), c);
                want.add(ObjLabel::simple(ctx, e, nu), c);
            }
            if (!(got == want)) {
                res.ok = false;
                res.detail = "generic-summand row fails at (" + l.str() + "), (" + m.str() + ")";
                return res;
            }
            // Theorem A, blockwise: every block sits in the linkage class of
            // its alcove weight.
            for (const auto& [cls, block] : blocks_of(ctx, got)) {
                if (!(linkage_class_of(ctx, block) == cls)) {
                    res.ok = false;
                    res.detail = "linkage block mismatch at (" + l.str() + "), (" + m.str() + ")";
                    return res;
                }
                if (table.coeff(l, m, cls) <= 0) {
                    res.ok = false;
                    res.detail = "block without fusion support at (" + l.str() + "), (" + m.str() + ")";
                    return res;
                }
            }
        }

    // The two Frobenius-twist patterns.
    if (ctx.ell() >= 5) {
        const ExtAffineElement s0s1 = word({0, 1});
        const ExtAffineElement s0s2 = word({0, 2});
        for (const Weight& l : ws)
            for (const Weight& m : ws) {
                const RegObject got = regpart_tensor(ctx, rules, &table,
                                                     {LabelKind::Simple, "", s0s1, l, std::nullopt},
                                                     {LabelKind::Simple, "", s0s2, m, std::nullopt});
                RegObject want;
                for (const auto& [nu, c] : table.row(l, m)) {
                    want.add(ObjLabel::simple(ctx, word({0, 1, 2, 1}), nu), c);
                    want.add(ObjLabel::simple(ctx, e, nu), c);
                }
                if (!(got == want)) {
                    res.ok = false;
                    res.detail = "(s0s1, s0s2) pattern fails at (" + l.str() + "), (" + m.str() + ")";
                    return res;
                }
            }
    }
    {
        const ExtAffineElement s0s1 = word({0, 1});
        for (const Weight& l : ws)
            for (const Weight& m : ws) {
                const RegObject got = regpart_tensor(ctx, rules, &table,
                                                     {LabelKind::Simple, "", s0s1, l, std::nullopt},
                                                     {LabelKind::Simple, "", s0s1, m, std::nullopt});
                RegObject want;
                for (const auto& [nu, c] : table.row(l, m)) {
                    want.add(ObjLabel::simple(ctx, word({0, 1, 2, 0}), nu), c);
                    want.add(ObjLabel::simple(ctx, word({0, 2}), nu), c);
                }
                if (!(got == want)) {
                    res.ok = false;
                    res.detail = "(s0s1, s0s1) pattern fails at (" + l.str() + "), (" + m.str() + ")";
                    return res;
                }
            }
    }

    // Omega-twist coherence: decorations (om, om') against the undecorated
    // product twisted by om om'.
    for (const auto& [key, entry] : rules.rules()) {
        if (ctx.ell() < entry.min_ell) continue;
        for (const auto& oa : ctx.omega_group())
            for (const auto& ob : ctx.omega_group())
                for (const Weight& l : ws)
                    for (const Weight& m : ws) {
                        const RegObject plain = regpart_tensor(
                            ctx, rules, &table, {LabelKind::Simple, "", key.first, l, std::nullopt},
                            {LabelKind::Simple, "", key.second, m, std::nullopt});
                        const RegObject dec = regpart_tensor(
                            ctx, rules, &table, {LabelKind::Simple, "", key.first, l, oa},
                            {LabelKind::Simple, "", key.second, m, ob});
                        if (!(dec == omega_twist(ctx, plain, ctx.omega_mul(oa, ob)))) {
                            res.ok = false;
                            res.detail = "twist coherence fails for rule (" + ctx.word_of(key.first) +
                                         ", " + ctx.word_of(key.second) + ")";
                            return res;
                        }
                    }
    }
    return res;
}

std::vector<CheckResult> run_verification(const EllContext& ctx) {
    std::vector<CheckResult> out;
    out.push_back(check_roundtrip(ctx, 4));
    out.push_back(check_length_agreement(ctx, 5));
    out.push_back(check_two_formulas(ctx));
    const FusionTable table = build_table(ctx);
    out.push_back(check_omega_equivariance(ctx, table));
    out.push_back(check_nonvanishing(ctx, table));
    out.push_back(check_ring_axioms(ctx, table, 16));
    if (ctx.rs().spec().family == Family::A && ctx.rs().rank() == 2)
        out.push_back(check_a2_golden(ctx, builtin_a2_rules(ctx), table));
    return out;
}

} // namespace alcove
