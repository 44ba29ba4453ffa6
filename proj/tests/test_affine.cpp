#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "alcove/affine.hpp"

using namespace alcove;

namespace {

EllContext make_ctx(char f, int r, Coord ell) {
    return EllContext(RootSystem::build({family_from_char(f), r}), ell);
}

} // namespace

TEST_CASE("ell below the Coxeter number is rejected") {
    CHECK_THROWS_AS(make_ctx('A', 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_ctx('G', 2, 5), std::invalid_argument);
    CHECK_NOTHROW(make_ctx('A', 2, 3));
}

TEST_CASE("dot action") {
    EllContext ctx = make_ctx('A', 2, 5);
    const Weight zero{0, 0};
    CHECK(ctx.dot_act(ExtAffineElement::identity(2), zero) == zero);
    // s_0 . 0 = (ell - 2) alpha_h
    CHECK(ctx.dot_act(ctx.generator(0), zero) == Weight{3, 3});
    // omega . 0 = (ell - 3) varpi_1 for the Omega generator of class varpi_1
    const auto& omega = ctx.omega_group()[1];
    CHECK(ctx.dot_act(omega.elem, zero) == Weight{2, 0});

    SUBCASE("group action homomorphism") {
        std::vector<ExtAffineElement> sample;
        for (const auto& [x, len] : ctx.enumerate_ball(3)) sample.push_back(x);
        sample.push_back(omega.elem);
        const std::vector<Weight> probes{zero, {1, 1}, {-2, 4}};
        for (const auto& x : sample)
            for (const auto& y : sample)
                for (const auto& p : probes)
                    CHECK(ctx.dot_act(x.compose(y), p) == ctx.dot_act(x, ctx.dot_act(y, p)));
        for (const auto& x : sample) {
            CHECK(x.compose(x.inverse()).is_identity());
            CHECK(x.inverse().compose(x).is_identity());
        }
    }
    SUBCASE("semidirect composition law") {
        const ExtAffineElement a{Weight{1, 0}, ctx.rs().simple_reflection(0)};
        const ExtAffineElement b{Weight{0, 2}, ctx.rs().simple_reflection(1)};
        const ExtAffineElement ab = a.compose(b);
        CHECK(ab.gamma() == a.gamma() + a.fin().apply(b.gamma()));
        CHECK(ab.fin() == a.fin().compose(b.fin()));
    }
}

TEST_CASE("singularity witness") {
    EllContext ctx = make_ctx('A', 2, 5);
    auto w = ctx.is_singular(Weight{4, 0});
    REQUIRE(w.has_value());
    CHECK(w->beta == 0); // alpha_1, the lowest offending index
    CHECK(w->m == 1);

    auto wall0 = ctx.is_singular(-ctx.rs().rho());
    REQUIRE(wall0.has_value());
    CHECK(wall0->m == 0);

    CHECK_FALSE(ctx.is_singular(Weight{1, 1}).has_value());
}

TEST_CASE("fundamental alcove membership") {
    EllContext ctx = make_ctx('A', 2, 5);
    const std::vector<Weight> expect{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}};
    CHECK(ctx.alcove_weights() == expect);
    CHECK_FALSE(ctx.in_fundamental_alcove(Weight{2, 1}));
    for (Coord ell : {3, 4, 5, 9})
        CHECK(make_ctx('A', 2, ell).in_fundamental_alcove(Weight{0, 0}));
    CHECK(make_ctx('B', 2, 4).alcove_weights() == std::vector<Weight>{Weight{0, 0}});
}

TEST_CASE("reduce") {
    EllContext ctx = make_ctx('A', 2, 5);
    SUBCASE("pinned examples") {
        ReductionResult r = ctx.reduce(Weight{3, 3});
        REQUIRE_FALSE(r.is_singular());
        CHECK(r.x == ctx.generator(0));
        CHECK(r.lambda == Weight{0, 0});
        CHECK(r.sign == -1);
        CHECK(r.length == 1);

        ReductionResult id = ctx.reduce(Weight{0, 0});
        CHECK(id.x.is_identity());
        CHECK(id.sign == 1);
        CHECK(id.length == 0);

        // ell alpha_h = t_{alpha_h} . 0, length 4, trivial class
        ReductionResult t = ctx.reduce(Weight{5, 5});
        REQUIRE_FALSE(t.is_singular());
        CHECK(t.lambda == Weight{0, 0});
        CHECK(t.length == 4);
        CHECK(t.sign == 1);
        CHECK(ctx.in_waff(t.x));
        CHECK(t.x == ctx.element_from_word({0, 1, 2, 1}));
    }
    SUBCASE("every weight in the box is singular or reduces with a round trip") {
        for (auto [f, r_, ell] : {std::tuple{'A', 2, 5}, {'B', 2, 4}}) {
            EllContext c2 = make_ctx(f, r_, ell);
            const Coord b = 2 * c2.ell();
            for (Coord a = -b; a <= b; ++a)
                for (Coord c = -b; c <= b; ++c) {
                    const Weight tau{a, c};
                    ReductionResult r = c2.reduce(tau);
                    if (r.is_singular()) {
                        CHECK(c2.is_singular(tau).has_value());
                        continue;
                    }
                    CHECK(c2.in_fundamental_alcove(r.lambda));
                    CHECK(c2.dot_act(r.x, r.lambda) == tau);
                    CHECK(r.sign == (r.length % 2 == 0 ? 1 : -1));
                }
        }
    }
    SUBCASE("ell varpi_2 mirrors ell varpi_1 with the inverse class") {
        ReductionResult r = ctx.reduce(Weight{0, 5});
        REQUIRE_FALSE(r.is_singular());
        CHECK(r.length == 2);
        CHECK(r.lambda == Weight{0, 2}); // omega^{-1} . 0
        CHECK(r.x == ctx.element_from_word({0, 1}));
        const auto& inv = ctx.omega_group()[2];
        CHECK(ctx.dot_act(inv.elem, Weight{0, 0}) == Weight{0, 2});
    }
    SUBCASE("round trip recovers the exact group element") {
        for (const auto& [x, len] : ctx.enumerate_ball(4))
            for (const Weight& lambda : ctx.alcove_weights()) {
                ReductionResult r = ctx.reduce(ctx.dot_act(x, lambda));
                REQUIRE_FALSE(r.is_singular());
                CHECK(r.x == x);
                CHECK(r.lambda == lambda);
            }
    }
}

TEST_CASE("length function") {
    EllContext ctx = make_ctx('A', 2, 5);
    CHECK(ctx.length(ExtAffineElement::identity(2)) == 0);
    for (std::size_t i = 0; i < ctx.generator_count(); ++i) CHECK(ctx.length(ctx.generator(i)) == 1);
    CHECK(ctx.reduce(Weight{5, 0}).length == 2);
    for (const auto& o : ctx.omega_group()) CHECK(ctx.length(o.elem) == 0);

    SUBCASE("right multiplication by omega preserves length") {
        for (const auto& [x, len] : ctx.enumerate_ball(4))
            for (const auto& o : ctx.omega_group()) CHECK(ctx.length(x.compose(o.elem)) == len);
    }
    SUBCASE("separation count equals BFS word length") {
        for (auto [f, r, ell] : {std::tuple{'A', 1, 5}, {'A', 2, 5}, {'B', 2, 5}, {'G', 2, 7}}) {
            EllContext c = make_ctx(f, r, ell);
            for (const auto& [x, len] : c.enumerate_ball(5)) CHECK(c.length(x) == len);
        }
    }
}

TEST_CASE("sign character") {
    EllContext ctx = make_ctx('A', 2, 5);
    CHECK(ctx.sign(ExtAffineElement::identity(2)) == 1);
    CHECK(ctx.sign(ctx.generator(0)) == -1);
    CHECK(ctx.sign(ctx.element_from_word({0, 1, 2, 1})) == 1);
    const ExtAffineElement t_varpi{Weight{1, 0}, FiniteWeylElement::identity(2)};
    CHECK_THROWS_AS(ctx.sign(t_varpi), std::domain_error);
    for (const auto& [x, len] : ctx.enumerate_ball(5))
        CHECK(ctx.sign(x) == (len % 2 == 0 ? 1 : -1));
}

TEST_CASE("omega group") {
    SUBCASE("A2 has three elements, identity first, closed") {
        EllContext ctx = make_ctx('A', 2, 5);
        const auto& om = ctx.omega_group();
        REQUIRE(om.size() == 3);
        CHECK(om[0].elem.is_identity());
        // the generator is exactly t_{varpi_1} s_1 s_2
        const ExtAffineElement expect{
            Weight{1, 0},
            ctx.rs().simple_reflection(0).compose(ctx.rs().simple_reflection(1))};
        CHECK(om[1].elem == expect);
        for (const auto& a : om)
            for (const auto& b : om) {
                const auto& c = ctx.omega_mul(a, b);
                CHECK(a.elem.compose(b.elem) == c.elem);
            }
        CHECK(ctx.omega_inverse(om[1]).elem == om[2].elem);
    }
    SUBCASE("G2 trivial, A1 of order two") {
        CHECK(make_ctx('G', 2, 7).omega_group().size() == 1);
        CHECK(make_ctx('A', 1, 5).omega_group().size() == 2);
    }
    SUBCASE("Omega permutes the alcove weights") {
        EllContext ctx = make_ctx('A', 2, 5);
        for (const auto& o : ctx.omega_group()) {
            std::set<Weight> image;
            for (const Weight& w : ctx.alcove_weights()) {
                const Weight t = ctx.dot_act(o.elem, w);
                CHECK(ctx.in_fundamental_alcove(t));
                image.insert(t);
            }
            CHECK(image.size() == ctx.alcove_weights().size());
        }
        // the generator has order three on the orbit of zero
        const auto& omega = ctx.omega_group()[1];
        Weight w{0, 0};
        for (int k = 0; k < 3; ++k) w = ctx.dot_act(omega.elem, w);
        CHECK(w == Weight{0, 0});
    }
    SUBCASE("omega_of") {
        EllContext ctx = make_ctx('A', 2, 5);
        for (const auto& [x, len] : ctx.enumerate_ball(3)) CHECK(ctx.omega_of(x).elem.is_identity());
        const ExtAffineElement t_varpi{Weight{1, 0}, FiniteWeylElement::identity(2)};
        CHECK(ctx.omega_of(t_varpi).elem == ctx.omega_group()[1].elem);
        const ExtAffineElement t_ah{Weight{1, 1}, FiniteWeylElement::identity(2)};
        CHECK(ctx.omega_of(t_ah).elem.is_identity());
    }
    SUBCASE("non-cyclic fundamental group of D4") {
        EllContext d4 = make_ctx('D', 4, 6);
        const auto& om = d4.omega_group();
        REQUIRE(om.size() == 4);
        CHECK(om[0].elem.is_identity());
        // Z/2 x Z/2: every element is its own inverse
        for (const auto& o : om) {
            CHECK(d4.omega_mul(o, o).elem.is_identity());
            CHECK(d4.omega_inverse(o).elem == o.elem);
            CHECK(d4.length(o.elem) == 0);
        }
        // products of two distinct generators give the third
        const auto& c = d4.omega_mul(om[1], om[2]);
        CHECK_FALSE(c.elem.is_identity());
        CHECK_FALSE(c.elem == om[1].elem);
        CHECK_FALSE(c.elem == om[2].elem);
    }
    SUBCASE("E6 has a fundamental group of order three") {
        EllContext e6 = make_ctx('E', 6, 12);
        const auto& om = e6.omega_group();
        REQUIRE(om.size() == 3);
        CHECK(e6.omega_mul(om[1], om[2]).elem.is_identity());
        CHECK_FALSE(e6.omega_mul(om[1], om[1]).elem.is_identity());
    }
}

TEST_CASE("rank three alcove arithmetic") {
    for (auto [f, r, ell] : {std::tuple{'A', 3, 5}, {'C', 3, 7}}) {
        EllContext ctx = make_ctx(f, r, ell);
        for (const auto& [x, len] : ctx.enumerate_ball(4)) {
            CHECK(ctx.length(x) == len);
            for (const Weight& lambda : ctx.alcove_weights()) {
                ReductionResult red = ctx.reduce(ctx.dot_act(x, lambda));
                REQUIRE_FALSE(red.is_singular());
                CHECK(red.x == x);
                CHECK(red.lambda == lambda);
            }
        }
    }
}

TEST_CASE("dominant enumeration") {
    EllContext a2 = make_ctx('A', 2, 5);
    CHECK(a2.enumerate_dominant(0) ==
          std::vector<ExtAffineElement>{ExtAffineElement::identity(2)});
    CHECK(a2.enumerate_dominant(1) ==
          std::vector<ExtAffineElement>{ExtAffineElement::identity(2), a2.generator(0)});

    EllContext a1 = make_ctx('A', 1, 5);
    const auto d2 = a1.enumerate_dominant(2);
    REQUIRE(d2.size() == 3);
    CHECK(d2[0].is_identity());
    CHECK(d2[1] == a1.generator(0));
    CHECK(d2[2] == a1.element_from_word({0, 1}));

    SUBCASE("extended variant multiplies by Omega") {
        const auto ext = a2.enumerate_dominant(1, true);
        CHECK(ext.size() == 6); // {e, s0} x Omega
        for (const auto& x : ext) CHECK(a2.dominant_alcove(x));
    }
}

TEST_CASE("weight factorization") {
    EllContext ctx = make_ctx('A', 2, 5);
    SUBCASE("alcove weights factor through the identity") {
        for (const Weight& w : ctx.alcove_weights()) {
            auto f = ctx.weight_to_xlambda(w);
            CHECK(f.x.is_identity());
            CHECK(f.lambda == w);
        }
    }
    SUBCASE("pinned example") {
        auto f = ctx.weight_to_xlambda(Weight{3, 3});
        CHECK(f.x == ctx.generator(0));
        CHECK(f.lambda == Weight{0, 0});
    }
    SUBCASE("ell varpi_1 factors with a nontrivial Omega-decoration") {
        auto f = ctx.weight_to_xlambda(Weight{5, 0});
        CHECK(ctx.length(f.x) == 2);
        CHECK(ctx.in_waff(f.x));
        auto omega = ctx.principal_omega(f.lambda);
        REQUIRE(omega.has_value());
        CHECK_FALSE(omega->elem.is_identity());
        // x . (omega . 0) recovers the weight, i.e. the decorated word x om
        CHECK(ctx.dot_act(f.x.compose(omega->elem), Weight{0, 0}) == Weight{5, 0});
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(ctx.weight_to_xlambda(Weight{4, 0}), std::domain_error);  // singular
        CHECK_THROWS_AS(ctx.weight_to_xlambda(Weight{-1, 1}), std::domain_error); // not dominant
    }
}

TEST_CASE("linkage class of singular weights") {
    EllContext ctx = make_ctx('A', 2, 5);
    // regular weights fold to their alcove representative
    CHECK(ctx.linkage_class(Weight{3, 3}) == Weight{0, 0});
    CHECK(ctx.linkage_class(Weight{5, 0}) == Weight{2, 0});
    // wall weights fold into the closure
    const Weight cls = ctx.linkage_class(Weight{4, 0});
    const Weight shifted = cls + ctx.rs().rho();
    for (std::size_t b = 0; b < ctx.rs().positive_roots().size(); ++b) {
        const Coord p = ctx.rs().pair(shifted, b);
        CHECK(p >= 0);
        CHECK(p <= ctx.ell());
    }
    // and stay in the same orbit: reducing any dot-translate gives the same class
    CHECK(ctx.linkage_class(ctx.dot_act(ctx.generator(0), Weight{4, 0})) == cls);

    SUBCASE("word_of names reduced words") {
        CHECK(ctx.word_of(ExtAffineElement::identity(2)) == "e");
        CHECK(ctx.word_of(ctx.generator(0)) == "s0");
        for (const auto& [x, len] : ctx.enumerate_ball(4)) {
            const std::string w = ctx.word_of(x);
            std::vector<int> letters;
            for (std::size_t i = 0; i < w.size(); i += 2)
                if (w[i] == 's') letters.push_back(w[i + 1] - '0');
            CHECK(static_cast<Coord>(letters.size()) == len);
            CHECK(ctx.element_from_word(letters) == x);
        }
    }
}
