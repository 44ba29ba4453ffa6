#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "alcove/rootsystem.hpp"
#include "alcove/weight.hpp"

namespace alcove {

/// Weight multiplicities of the Weyl module Delta(lambda), stored on dominant
/// orbit representatives only (multiplicities are W_fin-invariant).
struct WeightMultiplicityTable {
    Weight highest;
    std::unordered_map<Weight, std::int64_t, WeightHash> mults;
};

/// Finitely supported Z-linear combination of Weyl characters, keyed by
/// dominant highest weight.
using CharacterVector = std::map<Weight, std::int64_t>;

/// Dominant weights mu <= lambda, by descent through positive roots.
std::vector<Weight> dominant_below(const RootSystem& rs, const Weight& lambda);

/// Weyl dimension formula; exact.
std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda);

/// Freudenthal weight multiplicities of Delta(lambda).  Results are cached
/// per (root system type, lambda) behind a synchronized map; tables whose
/// dimension exceeds 10^7 are rejected to keep everything desk-scale.
const WeightMultiplicityTable& freudenthal(const RootSystem& rs, const Weight& lambda);

/// Multiplicity at an arbitrary weight via its dominant representative.
std::int64_t mult_at(const RootSystem& rs, const WeightMultiplicityTable& table, const Weight& eta);

/// Full W_fin-orbit of a dominant weight.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant);

/// Classical tensor product decomposition ch Delta(lambda) * ch Delta(mu) =
/// sum N_tau ch Delta(tau): rho-shift each weight of Delta(lambda) by mu,
/// drop wall hits, fold the rest to dominant with the sign of the folding
/// element.
CharacterVector klimyk_tensor(const RootSystem& rs, const Weight& lambda, const Weight& mu);

} // namespace alcove
