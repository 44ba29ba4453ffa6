#include "alcove/fusion.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "alcove/characters.hpp"
#include "alcove/checked.hpp"

namespace alcove {

using ordered_json = nlohmann::ordered_json;

bool negligible(const EllContext& ctx, const Weight& nu) {
    if (!nu.is_dominant()) throw std::invalid_argument("negligible: weight is not dominant");
    return !ctx.in_fundamental_alcove(nu);
}

namespace {

void require_alcove(const EllContext& ctx, const Weight& w, const char* who) {
    if (!ctx.in_fundamental_alcove(w))
        throw std::domain_error(std::string(who) + ": weight " + w.str() +
                                " is not in C_fund cap X");
}

} // namespace

FusionRow fusion_row(const EllContext& ctx, const Weight& lambda, const Weight& mu) {
    require_alcove(ctx, lambda, "fusion_row");
    require_alcove(ctx, mu, "fusion_row");
    const auto& table = freudenthal(ctx.rs(), lambda);
    FusionRow row;
    for (const auto& [dom, m] : table.mults) {
        for (const Weight& eta : weyl_orbit(ctx.rs(), dom)) {
            ReductionResult red = ctx.reduce(eta + mu);
            if (red.is_singular()) continue;
            auto [it, fresh] = row.emplace(red.lambda, 0);
            it->second = checked_add(it->second, red.sign * m);
            if (it->second == 0) row.erase(it);
        }
    }
    return row;
}

std::int64_t fusion_coeff(const EllContext& ctx, const Weight& lambda, const Weight& mu,
                          const Weight& nu) {
    require_alcove(ctx, nu, "fusion_coeff");
    FusionRow row = fusion_row(ctx, lambda, mu);
    auto it = row.find(nu);
    return it == row.end() ? 0 : it->second;
}

FusionRow fusion_row_racah(const EllContext& ctx, const Weight& lambda, const Weight& mu) {
    require_alcove(ctx, lambda, "fusion_row_racah");
    require_alcove(ctx, mu, "fusion_row_racah");
    FusionRow row;
    for (const auto& [tau, n] : klimyk_tensor(ctx.rs(), lambda, mu)) {
        ReductionResult red = ctx.reduce(tau);
        if (red.is_singular()) continue;
        auto [it, fresh] = row.emplace(red.lambda, 0);
        it->second = checked_add(it->second, red.sign * n);
        if (it->second == 0) row.erase(it);
    }
    return row;
}

std::int64_t fusion_coeff_racah(const EllContext& ctx, const Weight& lambda, const Weight& mu,
                                const Weight& nu) {
    require_alcove(ctx, nu, "fusion_coeff_racah");
    FusionRow row = fusion_row_racah(ctx, lambda, mu);
    auto it = row.find(nu);
    return it == row.end() ? 0 : it->second;
}

std::pair<Weight, std::int64_t> verify_nonvanishing(const EllContext& ctx, const Weight& lambda,
                                                    const Weight& mu) {
    require_alcove(ctx, lambda, "verify_nonvanishing");
    require_alcove(ctx, mu, "verify_nonvanishing");
    const Weight nu = ctx.rs().dominant_representative(ctx.rs().w0_image(lambda) + mu).first;
    if (!ctx.in_fundamental_alcove(nu))
        throw std::logic_error("nonvanishing: w0(lambda) + mu left the alcove");
    const std::int64_t c = fusion_coeff(ctx, lambda, mu, nu);
    if (c < 1) throw std::logic_error("nonvanishing: coefficient vanished");
    return {nu, c};
}

const FusionRow& FusionTable::row(const Weight& lambda, const Weight& mu) const {
    auto key = lambda < mu ? std::make_pair(lambda, mu) : std::make_pair(mu, lambda);
    auto it = entries_.find(key);
    if (it == entries_.end())
        throw std::domain_error("fusion table: no row for (" + lambda.str() + "), (" + mu.str() + ")");
    return it->second;
}

std::int64_t FusionTable::coeff(const Weight& lambda, const Weight& mu, const Weight& nu) const {
    const FusionRow& r = row(lambda, mu);
    auto it = r.find(nu);
    return it == r.end() ? 0 : it->second;
}

namespace {

ordered_json weight_json(const Weight& w) {
    ordered_json a = ordered_json::array();
    for (Coord c : w.coords()) a.push_back(c);
    return a;
}

Weight weight_from_json(const ordered_json& a) {
    std::vector<Coord> c;
    for (const auto& v : a) c.push_back(v.get<Coord>());
    return Weight(std::move(c));
}

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xf);
    return os.str();
}

} // namespace

std::string FusionTable::canonical_json() const {
    ordered_json j;
    j["family"] = std::string(1, meta_.family);
    j["rank"] = meta_.rank;
    j["ell"] = meta_.ell;
    ordered_json entries = ordered_json::array();
    for (const auto& [key, row] : entries_) {
        ordered_json e;
        e["l"] = weight_json(key.first);
        e["m"] = weight_json(key.second);
        ordered_json out = ordered_json::array();
        for (const auto& [nu, c] : row) {
            ordered_json o;
            o["n"] = weight_json(nu);
            o["c"] = c;
            out.push_back(o);
        }
        e["out"] = out;
        entries.push_back(e);
    }
    j["entries"] = entries;
    return j.dump();
}

std::string FusionTable::digest() const { return fnv1a_hex(canonical_json()); }

std::string FusionTable::file_json() const {
    const std::string canon = canonical_json();
    // splice the digest in as the trailing field of the same object
    std::string out = canon;
    out.pop_back(); // '}'
    out += ",\"digest\":\"" + fnv1a_hex(canon) + "\"}";
    return out;
}

FusionTable FusionTable::from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    FusionTable t;
    t.meta_.family = j.at("family").get<std::string>().at(0);
    t.meta_.rank = j.at("rank").get<int>();
    t.meta_.ell = j.at("ell").get<Coord>();
    std::set<Weight> ws;
    for (const auto& e : j.at("entries")) {
        FusionRow row;
        for (const auto& o : e.at("out")) row[weight_from_json(o.at("n"))] = o.at("c").get<std::int64_t>();
        const Weight l = weight_from_json(e.at("l"));
        const Weight m = weight_from_json(e.at("m"));
        ws.insert(l);
        ws.insert(m);
        t.entries_[{l, m}] = std::move(row);
    }
    t.weights_.assign(ws.begin(), ws.end());
    if (j.contains("digest")) {
        const std::string want = j.at("digest").get<std::string>();
        const std::string got = t.digest();
        if (want != got)
            throw std::runtime_error("fusion table digest mismatch: stored " + want + ", recomputed " + got);
    }
    return t;
}

namespace {

FusionTable assemble(const EllContext& ctx, bool parallel) {
    const auto& weights = ctx.alcove_weights();
    std::vector<std::pair<Weight, Weight>> pairs;
    for (std::size_t i = 0; i < weights.size(); ++i)
        for (std::size_t k = i; k < weights.size(); ++k) pairs.emplace_back(weights[i], weights[k]);

    std::vector<FusionRow> rows(pairs.size());
    if (parallel) {
        // Multiplicity tables are shared across rows; fill the cache up front
        // so the loop below only reads.
        for (const auto& w : weights) freudenthal(ctx.rs(), w);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long idx = 0; idx < static_cast<long long>(pairs.size()); ++idx)
            rows[static_cast<std::size_t>(idx)] =
                fusion_row(ctx, pairs[static_cast<std::size_t>(idx)].first,
                           pairs[static_cast<std::size_t>(idx)].second);
    } else {
        for (std::size_t idx = 0; idx < pairs.size(); ++idx)
            rows[idx] = fusion_row(ctx, pairs[idx].first, pairs[idx].second);
    }

    std::map<std::pair<Weight, Weight>, FusionRow> entries;
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) entries[pairs[idx]] = std::move(rows[idx]);
    FusionTable::Meta meta{static_cast<char>(ctx.rs().spec().family), ctx.rs().rank(), ctx.ell()};
    return FusionTable(meta, weights, std::move(entries));
}

} // namespace

FusionTable build_table_serial(const EllContext& ctx) { return assemble(ctx, false); }
FusionTable build_table(const EllContext& ctx) { return assemble(ctx, true); }

std::string cache_file_name(const FusionTable::Meta& meta) {
    return std::string(1, meta.family) + std::to_string(meta.rank) + "_ell" +
           std::to_string(meta.ell) + ".json";
}

void save_table(const FusionTable& table, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const fs::path path = fs::path(dir) / cache_file_name(table.meta());
    if (fs::exists(path)) {
        FusionTable existing = load_table(path.string());
        if (existing.digest() != table.digest())
            throw std::runtime_error("cache file " + path.string() +
                                     " holds a table with a different digest");
        return; // write-once: identical content already present
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << table.file_json();
}

FusionTable load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return FusionTable::from_json(ss.str());
}

} // namespace alcove
