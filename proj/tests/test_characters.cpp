#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alcove/characters.hpp"

using namespace alcove;

namespace {

std::shared_ptr<const RootSystem> make(char f, int r) {
    return RootSystem::build({family_from_char(f), r});
}

std::int64_t orbit_weighted_total(const RootSystem& rs, const WeightMultiplicityTable& t) {
    std::int64_t total = 0;
    for (const auto& [dom, m] : t.mults)
        total += m * static_cast<std::int64_t>(weyl_orbit(rs, dom).size());
    return total;
}

} // namespace

TEST_CASE("dominant weights below a highest weight") {
    auto a2 = make('A', 2);
    CHECK(dominant_below(*a2, Weight{1, 1}) == std::vector<Weight>{{1, 1}, {0, 0}});
    CHECK(dominant_below(*a2, Weight{0, 0}) == std::vector<Weight>{{0, 0}});
    auto a1 = make('A', 1);
    CHECK(dominant_below(*a1, Weight{4}) == std::vector<Weight>{{4}, {2}, {0}});
    CHECK_THROWS_AS(dominant_below(*a2, Weight{-1, 0}), std::invalid_argument);
}

TEST_CASE("Weyl dimension formula") {
    auto a2 = make('A', 2);
    CHECK(weyl_dim(*a2, Weight{0, 0}) == 1);
    CHECK(weyl_dim(*a2, Weight{1, 0}) == 3);
    CHECK(weyl_dim(*a2, Weight{1, 1}) == 8);
    CHECK(weyl_dim(*a2, Weight{2, 2}) == 27);
    auto g2 = make('G', 2);
    CHECK(weyl_dim(*g2, Weight{1, 0}) == 7);
    CHECK(weyl_dim(*g2, Weight{0, 1}) == 14);
    auto e8 = make('E', 8);
    Weight adj(8);
    adj[7] = 1;
    CHECK(weyl_dim(*e8, adj) == 248);
}

TEST_CASE("Freudenthal multiplicities") {
    auto a2 = make('A', 2);
    SUBCASE("adjoint of A2") {
        const auto& t = freudenthal(*a2, Weight{1, 1});
        CHECK(t.mults.at(Weight{1, 1}) == 1);
        CHECK(t.mults.at(Weight{0, 0}) == 2);
        CHECK(orbit_weighted_total(*a2, t) == 8);
    }
    SUBCASE("rank one string") {
        auto a1 = make('A', 1);
        const auto& t = freudenthal(*a1, Weight{3});
        CHECK(t.mults.at(Weight{3}) == 1);
        CHECK(t.mults.at(Weight{1}) == 1);
        CHECK(t.mults.size() == 2);
    }
    SUBCASE("totals match the dimension formula") {
        for (Coord a = 0; a <= 4; ++a)
            for (Coord b = 0; b <= 4; ++b) {
                const Weight w{a, b};
                CHECK(orbit_weighted_total(*a2, freudenthal(*a2, w)) == weyl_dim(*a2, w));
            }
        auto g2 = make('G', 2);
        const Weight w{1, 1};
        CHECK(orbit_weighted_total(*g2, freudenthal(*g2, w)) == weyl_dim(*g2, w));
    }
    SUBCASE("lookups at arbitrary weights") {
        const auto& t = freudenthal(*a2, Weight{1, 1});
        CHECK(mult_at(*a2, t, Weight{2, -1}) == 1); // a root folds to (1,1)
        CHECK(mult_at(*a2, t, Weight{0, 0}) == 2);
        CHECK(mult_at(*a2, t, Weight{5, 5}) == 0);
    }
    SUBCASE("saturated rank-one strings") {
        auto a1 = make('A', 1);
        for (Coord top = 0; top <= 20; ++top) {
            const auto& t = freudenthal(*a1, Weight{top});
            for (Coord k = top; k >= 0; k -= 2) CHECK(mult_at(*a1, t, Weight{k}) == 1);
        }
    }
}

TEST_CASE("Klimyk tensor decomposition") {
    auto a2 = make('A', 2);
    SUBCASE("unit") {
        CHECK(klimyk_tensor(*a2, Weight{2, 1}, Weight{0, 0}) ==
              CharacterVector{{Weight{2, 1}, 1}});
    }
    SUBCASE("3 x 3 = 6 + 3bar") {
        CHECK(klimyk_tensor(*a2, Weight{1, 0}, Weight{1, 0}) ==
              CharacterVector{{Weight{2, 0}, 1}, {Weight{0, 1}, 1}});
    }
    SUBCASE("8 x 8") {
        const CharacterVector expect{{Weight{2, 2}, 1}, {Weight{3, 0}, 1}, {Weight{0, 3}, 1},
                                     {Weight{1, 1}, 2}, {Weight{0, 0}, 1}};
        CHECK(klimyk_tensor(*a2, Weight{1, 1}, Weight{1, 1}) == expect);
    }
    SUBCASE("dimension identity and commutativity on a box") {
        for (Coord a = 0; a <= 2; ++a)
            for (Coord b = 0; b <= 2; ++b)
                for (Coord c = 0; c <= 2; ++c)
                    for (Coord d = 0; d <= 2; ++d) {
                        const Weight l{a, b}, m{c, d};
                        const CharacterVector prod = klimyk_tensor(*a2, l, m);
                        std::int64_t total = 0;
                        for (const auto& [tau, n] : prod) {
                            CHECK(n > 0);
                            total += n * weyl_dim(*a2, tau);
                        }
                        CHECK(total == weyl_dim(*a2, l) * weyl_dim(*a2, m));
                        CHECK(prod == klimyk_tensor(*a2, m, l));
                    }
    }
    SUBCASE("associativity on character vectors over a box") {
        auto mul = [&](const CharacterVector& u, const CharacterVector& v) {
            CharacterVector out;
            for (const auto& [a, na] : u)
                for (const auto& [b, nb] : v)
                    for (const auto& [c, nc] : klimyk_tensor(*a2, a, b)) out[c] += na * nb * nc;
            return out;
        };
        std::vector<CharacterVector> box;
        for (Coord a = 0; a <= 1; ++a)
            for (Coord b = 0; b <= 1; ++b) box.push_back({{Weight{a, b}, 1}});
        for (const auto& x : box)
            for (const auto& y : box)
                for (const auto& z : box) CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
    }
    SUBCASE("works for the non simply laced types") {
        auto b2 = make('B', 2);
        const CharacterVector prod = klimyk_tensor(*b2, Weight{1, 0}, Weight{1, 0});
        std::int64_t total = 0;
        for (const auto& [tau, n] : prod) total += n * weyl_dim(*b2, tau);
        CHECK(total == weyl_dim(*b2, Weight{1, 0}) * weyl_dim(*b2, Weight{1, 0}));
    }
}

TEST_CASE("dimension guard rejects oversized tables") {
    auto a2 = make('A', 2);
    CHECK_THROWS_AS(freudenthal(*a2, Weight{500, 500}), std::domain_error);
}
