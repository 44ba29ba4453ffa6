#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "alcove/affine.hpp"
#include "alcove/weight.hpp"

namespace alcove {

/// True iff the indecomposable tilting module T(nu) is negligible, i.e. nu
/// lies outside the open fundamental alcove.
bool negligible(const EllContext& ctx, const Weight& nu);

using FusionRow = std::map<Weight, std::int64_t>;

/// Structure constants c_{lambda,mu}^nu of the semisimplified tilting
/// category, computed as an alternating sum of Weyl-module weight
/// multiplicities over the affine Weyl group.  The sum runs over the weights
/// of Delta(lambda), which makes it finite without any cutoff.
std::int64_t fusion_coeff(const EllContext& ctx, const Weight& lambda, const Weight& mu,
                          const Weight& nu);
FusionRow fusion_row(const EllContext& ctx, const Weight& lambda, const Weight& mu);

/// Independent route: decompose classically (Klimyk), then fold each Weyl
/// factor into the fundamental alcove with its sign.
std::int64_t fusion_coeff_racah(const EllContext& ctx, const Weight& lambda, const Weight& mu,
                                const Weight& nu);
FusionRow fusion_row_racah(const EllContext& ctx, const Weight& lambda, const Weight& mu);

/// nu = dominant representative of w_0(lambda) + mu always names a nonzero
/// coefficient inside the alcove; returns (nu, c) and throws std::logic_error
/// if the guarantee is violated (which would indicate a bug, not bad input).
std::pair<Weight, std::int64_t> verify_nonvanishing(const EllContext& ctx, const Weight& lambda,
                                                    const Weight& mu);

/// Complete fusion table over C_fund cap X.  Rows are stored once per
/// unordered pair, keyed with l <= m lexicographically.
class FusionTable {
public:
    struct Meta {
        char family;
        int rank;
        Coord ell;
    };

    FusionTable() = default;
    FusionTable(Meta meta, std::vector<Weight> weights,
                std::map<std::pair<Weight, Weight>, FusionRow> entries)
        : meta_(meta), weights_(std::move(weights)), entries_(std::move(entries)) {}

    const Meta& meta() const { return meta_; }
    const std::vector<Weight>& weights() const { return weights_; }
    const std::map<std::pair<Weight, Weight>, FusionRow>& entries() const { return entries_; }

    const FusionRow& row(const Weight& lambda, const Weight& mu) const;
    std::int64_t coeff(const Weight& lambda, const Weight& mu, const Weight& nu) const;

    /// Canonical serialization (without digest) and its FNV-1a hash.
    std::string canonical_json() const;
    std::string digest() const;
    /// Full file content: canonical serialization plus trailing digest field.
    std::string file_json() const;

    static FusionTable from_json(const std::string& text); // verifies digest

    friend bool operator==(const FusionTable& a, const FusionTable& b) {
        return a.meta_.family == b.meta_.family && a.meta_.rank == b.meta_.rank &&
               a.meta_.ell == b.meta_.ell && a.entries_ == b.entries_;
    }

private:
    Meta meta_{};
    std::vector<Weight> weights_;
    std::map<std::pair<Weight, Weight>, FusionRow> entries_;
};

/// Straightforward reference builder: one row after another.
FusionTable build_table_serial(const EllContext& ctx);
/// Production builder: rows for distinct pairs in parallel (OpenMP when
/// available), merged in fixed key order; output is identical to the serial
/// reference by construction and by test.
FusionTable build_table(const EllContext& ctx);

/// Cache layout: <family><rank>_ell<ell>.json under dir.
std::string cache_file_name(const FusionTable::Meta& meta);
/// Write-once semantics: an existing file must carry the same digest,
/// otherwise std::runtime_error.
void save_table(const FusionTable& table, const std::string& dir);
FusionTable load_table(const std::string& path);

} // namespace alcove
