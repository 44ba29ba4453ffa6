#include "alcove/profiles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "alcove/checked.hpp"

namespace alcove {

std::string DegreeConstraint::str() const {
    if (zero) return "0";
    std::string s;
    auto app = [&](const std::string& part) {
        if (!s.empty()) s += ", ";
        s += part;
    };
    if (exactly) app("exactly T(" + exactly->str() + ")");
    if (contains) app("contains T(" + contains->str() + ") once");
    if (negligible) app("negligible");
    if (support) app("support size " + std::to_string(support->size()));
    return s.empty() ? "unconstrained" : s;
}

DegreeConstraint ComplexProfile::at(int i) const {
    int key = i;
    if (symmetric_ && key < 0) key = -key;
    auto it = degrees_.find(key);
    if (it != degrees_.end()) return it->second;
    DegreeConstraint zero;
    zero.zero = true;
    return zero;
}

namespace {

std::vector<Weight> support_set(const EllContext& ctx, const Weight& mu, Coord max_len) {
    std::set<Weight> s;
    for (const auto& y : ctx.enumerate_dominant(max_len))
        s.insert(ctx.dot_act(y, mu));
    return {s.begin(), s.end()};
}

} // namespace

ComplexProfile weyl_profile(const EllContext& ctx, const ExtAffineElement& x, const Weight& lambda) {
    const ObjLabel label = ObjLabel::weyl(ctx, x, lambda);
    const Weight mu = label.slot();
    const Coord L = ctx.length(label.x());
    std::map<int, DegreeConstraint> degrees;
    for (Coord i = 0; i <= L; ++i) {
        DegreeConstraint c;
        if (i == 0) c.exactly = ctx.dot_act(label.x(), mu);
        if (i == L) c.exactly = mu;
        if (i != L) c.negligible = true;
        c.support = support_set(ctx, mu, L - i);
        degrees[static_cast<int>(i)] = std::move(c);
    }
    return ComplexProfile(std::move(degrees), false);
}

ComplexProfile simple_profile(const EllContext& ctx, const ExtAffineElement& x, const Weight& lambda) {
    const ObjLabel label = ObjLabel::simple(ctx, x, lambda);
    const Weight mu = label.slot();
    const Coord L = ctx.length(label.x());
    std::map<int, DegreeConstraint> degrees;
    for (Coord i = 0; i <= L; ++i) {
        DegreeConstraint c;
        if (i == 0) {
            if (L == 0)
                c.exactly = mu;
            else
                c.contains = ctx.dot_act(label.x(), mu);
        }
        if (i == L && L > 0) c.exactly = mu;
        if (i == L - 1) c.negligible = true;
        c.support = support_set(ctx, mu, L - i);
        degrees[static_cast<int>(i)] = std::move(c);
    }
    return ComplexProfile(std::move(degrees), true);
}

std::optional<std::string> check_profile(const EllContext& ctx, const CandidateComplex& candidate,
                                         const ComplexProfile& profile) {
    auto terms_at = [&](int i) {
        auto it = candidate.find(i);
        return it == candidate.end() ? std::vector<std::pair<Weight, std::int64_t>>{} : it->second;
    };

    std::set<int> keys;
    for (const auto& [i, t] : candidate)
        if (!t.empty()) keys.insert(i);
    for (const auto& [i, c] : profile.stored()) {
        keys.insert(i);
        if (profile.symmetric()) keys.insert(-i);
    }

    if (profile.symmetric()) {
        for (int i : keys) {
            auto a = terms_at(i), b = terms_at(-i);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) return "degree " + std::to_string(i) + " breaks the symmetry T_i = T_{-i}";
        }
    }

    for (int i : keys) {
        const DegreeConstraint c = profile.at(i);
        const auto terms = terms_at(i);
        const std::string where = "degree " + std::to_string(i);
        if (c.zero) {
            if (!terms.empty()) return where + " must vanish";
            continue;
        }
        if (c.exactly) {
            if (terms.size() != 1 || !(terms[0].first == *c.exactly) || terms[0].second != 1)
                return where + " must be exactly T(" + c.exactly->str() + ")";
        }
        if (c.contains) {
            std::int64_t m = 0;
            for (const auto& [w, k] : terms)
                if (w == *c.contains) m += k;
            if (m != 1) return where + " must contain T(" + c.contains->str() + ") exactly once";
        }
        if (c.negligible) {
            for (const auto& [w, k] : terms)
                if (ctx.in_fundamental_alcove(w))
                    return where + " must be negligible but holds T(" + w.str() + ")";
        }
        if (c.support) {
            for (const auto& [w, k] : terms)
                if (!std::binary_search(c.support->begin(), c.support->end(), w))
                    return where + " holds T(" + w.str() + ") outside the admissible support";
        }
    }
    return std::nullopt;
}

Coord gfd(const EllContext& ctx, const ObjLabel& label) {
    if (label.kind() != LabelKind::Simple && label.kind() != LabelKind::Weyl)
        throw std::domain_error("gfd: label must be Simple or Weyl");
    if (!label.regular()) throw std::domain_error("gfd: label is ell-singular");
    return ctx.length(label.x());
}

GfdResult gfd_tensor(const EllContext& ctx, const std::vector<ObjLabel>& labels) {
    if (labels.empty()) throw std::domain_error("gfd_tensor: empty factor list");
    GfdResult r;
    for (const auto& l : labels) r.gfd = checked_add(r.gfd, gfd(ctx, l));
    r.strongly_regular = true;
    return r;
}

bool is_regular_label(const EllContext& ctx, const ObjLabel& label) {
    (void)ctx;
    return label.regular();
}

StrongRegularity strong_regularity(const EllContext& ctx, const ObjLabel& label) {
    (void)ctx;
    switch (label.kind()) {
        case LabelKind::Simple:
        case LabelKind::Weyl:
        case LabelKind::Tilting:
            return label.regular() ? StrongRegularity::StronglyRegular
                                   : StrongRegularity::NotStronglyRegular;
        case LabelKind::Custom: return StrongRegularity::Undetermined;
    }
    return StrongRegularity::Undetermined;
}

} // namespace alcove
