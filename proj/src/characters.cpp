#include "alcove/characters.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "alcove/checked.hpp"

namespace alcove {

namespace {

constexpr std::int64_t kDimGuard = 10'000'000;

Coord height_of_difference(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    auto exp = rs.expand_in_simple_roots(lambda - mu);
    if (!exp) throw std::logic_error("difference is not in the root lattice");
    Coord h = 0;
    for (Coord c : *exp) h += c;
    return h;
}

} // namespace

std::vector<Weight> dominant_below(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.is_dominant()) throw std::invalid_argument("dominant_below: weight is not dominant");
    std::set<Weight> seen{lambda};
    std::queue<Weight> work;
    work.push(lambda);
    while (!work.empty()) {
        Weight mu = work.front();
        work.pop();
        for (const auto& beta : rs.positive_roots()) {
            Weight nu = mu - beta.coords;
            if (!nu.is_dominant()) continue;
            if (seen.insert(nu).second) work.push(nu);
        }
    }
    std::vector<Weight> out(seen.begin(), seen.end());
    // Descending from lambda: sort by height of lambda - mu, then lex.
    std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        const Coord ha = height_of_difference(rs, lambda, a);
        const Coord hb = height_of_difference(rs, lambda, b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return out;
}

namespace {

// Exponent ledger for the Weyl dimension product; the quotient is integral,
// so numerator exponents dominate and reconstruction never divides.
std::int64_t weyl_dim_capped(const RootSystem& rs, const Weight& lambda, std::int64_t cap) {
    const Weight shifted = lambda + rs.rho();
    std::map<std::int64_t, std::int64_t> exps;
    auto fold = [&](std::int64_t v, std::int64_t sgn) {
        for (std::int64_t p = 2; p * p <= v; ++p)
            while (v % p == 0) {
                exps[p] += sgn;
                v /= p;
            }
        if (v > 1) exps[v] += sgn;
    };
    for (std::size_t b = 0; b < rs.positive_roots().size(); ++b) {
        fold(rs.pair(shifted, b), +1);
        fold(rs.pair(rs.rho(), b), -1);
    }
    std::int64_t result = 1;
    for (auto [p, e] : exps) {
        if (e < 0) throw std::logic_error("weyl_dim: non-integral result");
        for (std::int64_t k = 0; k < e; ++k) {
            if (result > cap / p + 1) return cap + 1; // saturate
            result *= p;
        }
    }
    return result;
}

} // namespace

std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.is_dominant()) throw std::invalid_argument("weyl_dim: weight is not dominant");
    constexpr std::int64_t cap = std::int64_t(1) << 62;
    const std::int64_t d = weyl_dim_capped(rs, lambda, cap);
    if (d > cap) throw std::overflow_error("weyl_dim overflow");
    return d;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant) {
    if (!dominant.is_dominant()) throw std::invalid_argument("weyl_orbit: weight is not dominant");
    std::set<Weight> seen{dominant};
    std::queue<Weight> work;
    work.push(dominant);
    while (!work.empty()) {
        Weight w = work.front();
        work.pop();
        for (int i = 0; i < rs.rank(); ++i) {
            Weight v = rs.simple_reflection(static_cast<std::size_t>(i)).apply(w);
            if (seen.insert(v).second) work.push(v);
        }
    }
    return {seen.begin(), seen.end()};
}

std::int64_t mult_at(const RootSystem& rs, const WeightMultiplicityTable& table, const Weight& eta) {
    const Weight rep = rs.dominant_representative(eta).first;
    auto it = table.mults.find(rep);
    return it == table.mults.end() ? 0 : it->second;
}

namespace {

WeightMultiplicityTable compute_freudenthal(const RootSystem& rs, const Weight& lambda) {
    WeightMultiplicityTable table;
    table.highest = lambda;

    const std::vector<Weight> doms = dominant_below(rs, lambda);
    table.mults.reserve(doms.size());
    table.mults[lambda] = 1;

    // (x, y) through the symmetrized pairing: for y = sum n_j alpha_j,
    // (x, y) = sum_j n_j d_j x_j with d_j = (alpha_j, alpha_j)/2.
    auto form_with_root_sum = [&](const Weight& x, const std::vector<Coord>& n) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < n.size(); ++j)
            s = checked_add(s, checked_mul(n[j], checked_mul(rs.simple_half_norm(j), x[j])));
        return s;
    };

    for (const Weight& mu : doms) {
        if (mu == lambda) continue;
        // numerator: 2 * sum_{beta>0} sum_{k>=1} m(mu + k beta) (mu + k beta, beta)
        std::int64_t num = 0;
        for (std::size_t b = 0; b < rs.positive_roots().size(); ++b) {
            const auto& beta = rs.positive_roots()[b];
            Weight cur = mu;
            for (Coord k = 1;; ++k) {
                cur = cur + beta.coords;
                const std::int64_t m = mult_at(rs, table, cur);
                if (m == 0) break; // weight strings have no gaps
                // (mu + k beta, beta) = d_beta * ((mu, beta^vee) + 2k)
                const std::int64_t p = checked_mul(beta.half_norm, rs.pair(mu, b) + 2 * k);
                num = checked_add(num, checked_mul(m, p));
            }
        }
        num = checked_mul(2, num);
        // denominator: (lambda+rho, lambda+rho) - (mu+rho, mu+rho)
        //            = (lambda + mu + 2 rho, lambda - mu)
        auto diff = rs.expand_in_simple_roots(lambda - mu);
        if (!diff) throw std::logic_error("freudenthal: mu not below lambda in the root lattice");
        const Weight sum = lambda + mu + Coord(2) * rs.rho();
        const std::int64_t den = form_with_root_sum(sum, *diff);
        table.mults[mu] = exact_div(num, den);
    }
    return table;
}

struct FreudenthalCache {
    std::mutex mtx;
    // keyed by (family, rank, lambda); first writer wins.
    std::map<std::tuple<char, int, std::vector<Coord>>, WeightMultiplicityTable> tables;
};

FreudenthalCache& cache() {
    static FreudenthalCache c;
    return c;
}

} // namespace

const WeightMultiplicityTable& freudenthal(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.is_dominant()) throw std::invalid_argument("freudenthal: weight is not dominant");
    if (weyl_dim_capped(rs, lambda, kDimGuard) > kDimGuard)
        throw std::domain_error("freudenthal: weyl_dim exceeds the 10^7 guard");

    auto key = std::make_tuple(static_cast<char>(rs.spec().family), rs.rank(), lambda.coords());
    auto& c = cache();
    {
        std::lock_guard<std::mutex> lock(c.mtx);
        auto it = c.tables.find(key);
        if (it != c.tables.end()) return it->second;
    }
    WeightMultiplicityTable fresh = compute_freudenthal(rs, lambda);
    std::lock_guard<std::mutex> lock(c.mtx);
    auto [it, inserted] = c.tables.emplace(std::move(key), std::move(fresh));
    (void)inserted; // a concurrent builder of the same key may have won
    return it->second;
}

CharacterVector klimyk_tensor(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    if (!lambda.is_dominant() || !mu.is_dominant())
        throw std::invalid_argument("klimyk_tensor: weights must be dominant");
    const auto& table = freudenthal(rs, lambda);
    CharacterVector out;
    const Weight shift = mu + rs.rho();
    for (const auto& [dom, m] : table.mults) {
        for (const Weight& eta : weyl_orbit(rs, dom)) {
            Weight xi = eta + shift;
            // Fold to dominant; a zero coordinate on the way or at the end
            // means xi lies on a finite wall and contributes nothing.
            auto [rep, w] = rs.dominant_representative(xi);
            bool on_wall = false;
            for (std::size_t i = 0; i < rep.rank(); ++i)
                if (rep[i] == 0) on_wall = true;
            if (on_wall) continue;
            const Weight tau = rep - rs.rho();
            auto [it, fresh] = out.emplace(tau, 0);
            it->second = checked_add(it->second, w.det() * m);
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

} // namespace alcove
