// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion is exact; the timed ones also enforce their budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "alcove/characters.hpp"
#include "alcove/fusion.hpp"
#include "alcove/profiles.hpp"
#include "alcove/regparts.hpp"
#include "alcove/verify.hpp"

using namespace alcove;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    int number;
    std::string title;
    bool ok = true;
    std::string detail;
    double seconds = 0;
};

EllContext make_ctx(char f, int r, Coord ell) {
    return EllContext(RootSystem::build({family_from_char(f), r}), ell);
}

void require(Criterion& c, bool cond, const std::string& what) {
    if (c.ok && !cond) {
        c.ok = false;
        c.detail = what;
    }
}

std::int64_t sl2_fusion(Coord ell, Coord a, Coord b, Coord cc) {
    if ((a + b + cc) % 2 != 0) return 0;
    if (cc < std::abs(a - b)) return 0;
    if (cc > std::min(a + b, 2 * (ell - 2) - a - b)) return 0;
    return 1;
}

// ---------------------------------------------------------------------------

Criterion criterion1() {
    Criterion c{1, "rank-one fusion equals the truncated Clebsch-Gordan rule, ell in {3,5,7}"};
    const auto t0 = Clock::now();
    for (Coord ell : {3, 5, 7}) {
        EllContext ctx = make_ctx('A', 1, ell);
        for (Coord a = 0; a <= ell - 2 && c.ok; ++a)
            for (Coord b = 0; b <= ell - 2 && c.ok; ++b)
                for (Coord d = 0; d <= ell - 2 && c.ok; ++d)
                    require(c, fusion_coeff(ctx, Weight{a}, Weight{b}, Weight{d}) ==
                                   sl2_fusion(ell, a, b, d),
                            "mismatch at ell=" + std::to_string(ell) + " (" + std::to_string(a) +
                                "," + std::to_string(b) + "," + std::to_string(d) + ")");
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    require(c, c.seconds < 1.0, "budget of 1 s exceeded");
    return c;
}

std::vector<EllContext> criterion2_contexts() {
    std::vector<EllContext> out;
    out.push_back(make_ctx('A', 2, 5));
    out.push_back(make_ctx('A', 2, 7));
    out.push_back(make_ctx('B', 2, 5));
    out.push_back(make_ctx('G', 2, 7));
    return out;
}

Criterion criterion2(const std::vector<EllContext>& ctxs) {
    Criterion c{2, "alternating-sum and classical-folding fusion agree on A2(5,7), B2(5), G2(7)"};
    const auto t0 = Clock::now();
    for (const auto& ctx : ctxs) {
        for (const Weight& l : ctx.alcove_weights())
            for (const Weight& m : ctx.alcove_weights()) {
                if (!c.ok) break;
                require(c, fusion_row(ctx, l, m) == fusion_row_racah(ctx, l, m),
                        ctx.rs().spec().str() + " ell=" + std::to_string(ctx.ell()) +
                            " rows differ at (" + l.str() + "), (" + m.str() + ")");
            }
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    require(c, c.seconds < 30.0, "budget of 30 s exceeded");
    return c;
}

Criterion criterion3(const std::vector<EllContext>& ctxs) {
    Criterion c{3, "Omega-equivariance, nonvanishing and ring axioms on every table of (1)-(2)"};
    const auto t0 = Clock::now();
    std::vector<EllContext> all = ctxs;
    for (Coord ell : {3, 5, 7}) all.push_back(make_ctx('A', 1, ell));
    for (const auto& ctx : all) {
        const FusionTable table = build_table(ctx);
        for (const CheckResult& r : {check_omega_equivariance(ctx, table),
                                     check_nonvanishing(ctx, table),
                                     check_ring_axioms(ctx, table)})
            require(c, r.ok,
                    ctx.rs().spec().str() + " ell=" + std::to_string(ctx.ell()) + ": " + r.name +
                        " (" + r.detail + ")");
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return c;
}

Criterion criterion4() {
    Criterion c{4, "A2 ell=5 example rows: generic summands, Frobenius patterns, linkage blocks"};
    const auto t0 = Clock::now();
    EllContext ctx = make_ctx('A', 2, 5);
    const FusionTable table = build_table(ctx);
    const CheckResult r = check_a2_golden(ctx, builtin_a2_rules(ctx), table);
    require(c, r.ok, r.detail);
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    require(c, c.seconds < 5.0, "budget of 5 s exceeded");
    return c;
}

Criterion criterion5() {
    Criterion c{5, "alcove round trip (A2/B2 at h, h+2), signs, and the two length algorithms"};
    const auto t0 = Clock::now();
    for (auto [f, r, ell] : {std::tuple{'A', 2, 3}, {'A', 2, 5}, {'B', 2, 4}, {'B', 2, 6}}) {
        EllContext ctx = make_ctx(f, r, ell);
        const CheckResult rt = check_roundtrip(ctx, 5);
        require(c, rt.ok,
                std::string(1, f) + std::to_string(r) + " ell=" + std::to_string(ell) + ": " +
                    rt.detail);
    }
    for (auto [f, r] : {std::pair{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}}) {
        auto rs = RootSystem::build({family_from_char(f), r});
        for (Coord ell : {rs->coxeter_number(), rs->coxeter_number() + 2}) {
            EllContext ctx(rs, ell);
            const CheckResult lt = check_length_agreement(ctx, 6);
            require(c, lt.ok,
                    std::string(1, f) + std::to_string(r) + " ell=" + std::to_string(ell) + ": " +
                        lt.detail);
        }
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    require(c, c.seconds < 60.0, "budget of 60 s exceeded");
    return c;
}

Criterion criterion6() {
    Criterion c{6, "A2 ell=5 word checks: ell*alpha_h, ell*varpi_1 and omega . 0"};
    EllContext ctx = make_ctx('A', 2, 5);
    const auto t0 = Clock::now();

    const ReductionResult rah = ctx.reduce(Weight{5, 5}); // ell * alpha_h
    require(c, !rah.is_singular() && rah.length == 4, "ell*alpha_h must reduce with length 4");
    require(c, rah.lambda == Weight{0, 0}, "ell*alpha_h must have a trivial Omega-part");
    require(c, rah.x == ctx.element_from_word({0, 1, 2, 1}),
            "ell*alpha_h must be the element s0s1s2s1");

    const ReductionResult rv = ctx.reduce(Weight{5, 0}); // ell * varpi_1
    require(c, !rv.is_singular() && rv.length == 2, "ell*varpi_1 must reduce with length 2");
    auto om = ctx.principal_omega(rv.lambda);
    require(c, om.has_value() && !om->elem.is_identity(),
            "ell*varpi_1 must carry a nontrivial Omega-part");
    if (om)
        require(c, ctx.dot_act(rv.x.compose(om->elem), Weight{0, 0}) == Weight{5, 0},
                "decorated word must recover ell*varpi_1");

    const auto& gen = ctx.omega_group()[1];
    require(c, ctx.dot_act(gen.elem, Weight{0, 0}) == Weight{2, 0},
            "omega . 0 must equal (ell-3) varpi_1");
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return c;
}

Criterion criterion7() {
    Criterion c{7, "gfd additivity over 200 random lists and Omega-twist coherence"};
    const auto t0 = Clock::now();
    EllContext ctx = make_ctx('A', 2, 5);

    const auto dominants = ctx.enumerate_dominant(4);
    std::mt19937 rng(1789);
    std::uniform_int_distribution<std::size_t> pick_x(0, dominants.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_w(0, ctx.alcove_weights().size() - 1);
    std::uniform_int_distribution<int> pick_len(1, 5);
    for (int round = 0; round < 200 && c.ok; ++round) {
        std::vector<ObjLabel> labels;
        Coord expected = 0;
        const int k = pick_len(rng);
        for (int i = 0; i < k; ++i) {
            const auto& x = dominants[pick_x(rng)];
            const Weight& w = ctx.alcove_weights()[pick_w(rng)];
            labels.push_back((i + round) % 2 == 0 ? ObjLabel::simple(ctx, x, w)
                                                  : ObjLabel::weyl(ctx, x, w));
            expected += ctx.length(x);
        }
        const GfdResult r = gfd_tensor(ctx, labels);
        require(c, r.gfd == expected && r.strongly_regular,
                "additivity failed on round " + std::to_string(round));
    }

    const PrincipalFusionRule rules = builtin_a2_rules(ctx);
    const FusionTable table = build_table(ctx);
    for (const auto& [key, entry] : rules.rules()) {
        if (ctx.ell() < entry.min_ell) continue;
        for (const auto& oa : ctx.omega_group())
            for (const auto& ob : ctx.omega_group())
                for (const Weight& l : ctx.alcove_weights())
                    for (const Weight& m : ctx.alcove_weights()) {
                        if (!c.ok) break;
                        const RegObject plain = regpart_tensor(
                            ctx, rules, &table, {LabelKind::Simple, "", key.first, l, std::nullopt},
                            {LabelKind::Simple, "", key.second, m, std::nullopt});
                        const RegObject dec =
                            regpart_tensor(ctx, rules, &table, {LabelKind::Simple, "", key.first, l, oa},
                                           {LabelKind::Simple, "", key.second, m, ob});
                        require(c, dec == omega_twist(ctx, plain, ctx.omega_mul(oa, ob)),
                                "twist coherence fails for rule (" + ctx.word_of(key.first) + ", " +
                                    ctx.word_of(key.second) + ")");
                    }
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return c;
}

Criterion criterion8() {
    Criterion c{8, "Freudenthal totals match weyl_dim (A2, B2, dim <= 10^4); Klimyk identity at ell=7"};
    const auto t0 = Clock::now();
    constexpr std::int64_t bound = 10'000;
    for (char f : {'A', 'B'}) {
        auto rs = RootSystem::build({family_from_char(f), 2});
        for (Coord a = 0;; ++a) {
            if (weyl_dim(*rs, Weight{a, 0}) > bound) break;
            for (Coord b = 0;; ++b) {
                const Weight w{a, b};
                const std::int64_t dim = weyl_dim(*rs, w);
                if (dim > bound) break;
                const auto& table = freudenthal(*rs, w);
                std::int64_t total = 0;
                for (const auto& [dom, m] : table.mults)
                    total += m * static_cast<std::int64_t>(weyl_orbit(*rs, dom).size());
                require(c, total == dim,
                        std::string(1, f) + "2: totals differ at (" + w.str() + ")");
                if (!c.ok) return c;
            }
        }
    }
    for (char f : {'A', 'B'}) {
        EllContext ctx = make_ctx(f, 2, 7);
        for (const Weight& l : ctx.alcove_weights())
            for (const Weight& m : ctx.alcove_weights()) {
                std::int64_t total = 0;
                for (const auto& [tau, n] : klimyk_tensor(ctx.rs(), l, m))
                    total += n * weyl_dim(ctx.rs(), tau);
                require(c, total == weyl_dim(ctx.rs(), l) * weyl_dim(ctx.rs(), m),
                        std::string(1, f) + "2 ell=7: Klimyk dimension identity fails at (" +
                            l.str() + "), (" + m.str() + ")");
            }
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    require(c, c.seconds < 30.0, "budget of 30 s exceeded");
    return c;
}

Criterion criterion9() {
    Criterion c{9, "A2 ell=13 fusion table: cold < 60 s, cached < 1 s, digests byte-identical"};
    EllContext ctx = make_ctx('A', 2, 13);
    require(c, ctx.alcove_weights().size() == 66, "expected 66 fundamental-alcove weights");

    const auto t0 = Clock::now();
    const FusionTable cold = build_table(ctx);
    const double cold_s = std::chrono::duration<double>(Clock::now() - t0).count();
    require(c, cold_s < 60.0, "cold build exceeded 60 s");

    const auto dir = std::filesystem::temp_directory_path() / "alcove-acceptance-cache";
    std::filesystem::remove_all(dir);
    save_table(cold, dir.string());
    const auto path = dir / cache_file_name(cold.meta());

    const auto t1 = Clock::now();
    const FusionTable warm = load_table(path.string());
    const double warm_s = std::chrono::duration<double>(Clock::now() - t1).count();
    require(c, warm_s < 1.0, "cache load exceeded 1 s");
    require(c, warm.digest() == cold.digest(), "digest mismatch after reload");

    // byte-identical reproduction from a fresh builder
    const FusionTable again = build_table_serial(ctx);
    std::ifstream in(path, std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    require(c, again.file_json() == bytes, "rebuilt table is not byte-identical to the cache");
    std::filesystem::remove_all(dir);

    c.seconds = cold_s + warm_s;
    return c;
}

} // namespace

int main() {
    std::vector<Criterion> results;
    const auto ctxs2 = criterion2_contexts();
    results.push_back(criterion1());
    results.push_back(criterion2(ctxs2));
    results.push_back(criterion3(ctxs2));
    results.push_back(criterion4());
    results.push_back(criterion5());
    results.push_back(criterion6());
    results.push_back(criterion7());
    results.push_back(criterion8());
    results.push_back(criterion9());

    int failures = 0;
    for (const auto& c : results) {
        std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", c.number,
                    c.title.c_str(), c.seconds, c.ok ? "" : " -- ", c.ok ? "" : c.detail.c_str());
        if (!c.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
