#include "alcove/regparts.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "alcove/checked.hpp"

namespace alcove {

using ordered_json = nlohmann::ordered_json;

std::string kind_name(LabelKind k) {
    switch (k) {
        case LabelKind::Simple: return "Simple";
        case LabelKind::Weyl: return "Weyl";
        case LabelKind::Tilting: return "Tilting";
        case LabelKind::Custom: return "Custom";
    }
    return "?";
}

namespace {

int kind_rank(LabelKind k) {
    // Custom summands print before the simples of the same block, matching
    // the usual M(nu) (+) L(nu) display.
    switch (k) {
        case LabelKind::Custom: return 0;
        case LabelKind::Simple: return 1;
        case LabelKind::Weyl: return 2;
        case LabelKind::Tilting: return 3;
    }
    return 4;
}

// Fold an extended element into (x_aff in W_aff, omega) and move the
// decoration into the slot, keeping the labeled module fixed:
// (x_aff om) . slot = x_aff . (om . slot).
std::pair<ExtAffineElement, Weight> canonical_pair(const EllContext& ctx, const ExtAffineElement& x,
                                                   const Weight& slot) {
    if (!ctx.in_fundamental_alcove(slot))
        throw std::domain_error("label slot " + slot.str() + " is not in C_fund cap X");
    const OmegaElement& om = ctx.omega_of(x);
    ExtAffineElement xa = x.compose(om.elem.inverse());
    if (!ctx.in_waff(xa)) throw std::logic_error("omega factorization failed");
    if (!ctx.dominant_alcove(xa))
        throw std::domain_error("label element is not in W_ext^+ (alcove not dominant)");
    return {std::move(xa), ctx.dot_act(om.elem, slot)};
}

} // namespace

ObjLabel ObjLabel::simple(const EllContext& ctx, const ExtAffineElement& x, const Weight& slot) {
    auto [xa, s] = canonical_pair(ctx, x, slot);
    ObjLabel l;
    l.kind_ = LabelKind::Simple;
    l.x_ = std::move(xa);
    l.slot_ = std::move(s);
    return l;
}

ObjLabel ObjLabel::weyl(const EllContext& ctx, const ExtAffineElement& x, const Weight& slot) {
    ObjLabel l = simple(ctx, x, slot);
    l.kind_ = LabelKind::Weyl;
    return l;
}

ObjLabel ObjLabel::custom(const EllContext& ctx, std::string name, const ExtAffineElement& x,
                          const Weight& slot) {
    ObjLabel l = simple(ctx, x, slot);
    l.kind_ = LabelKind::Custom;
    l.name_ = std::move(name);
    return l;
}

ObjLabel ObjLabel::tilting(const EllContext& ctx, const Weight& weight) {
    if (!weight.is_dominant()) throw std::domain_error("tilting label needs a dominant weight");
    ObjLabel l;
    l.kind_ = LabelKind::Tilting;
    l.x_ = ExtAffineElement::identity(weight.rank());
    l.slot_ = weight;
    // an indecomposable tilting is regular exactly when non-negligible
    l.regular_ = ctx.in_fundamental_alcove(weight);
    return l;
}

ObjLabel ObjLabel::from_weight(const EllContext& ctx, LabelKind kind, const Weight& weight,
                               const std::string& name) {
    if (!weight.is_dominant()) throw std::domain_error("label weight must be dominant");
    if (kind == LabelKind::Tilting) return tilting(ctx, weight);
    if (kind == LabelKind::Custom && !ctx.in_fundamental_alcove(weight))
        throw std::domain_error(name + "(" + weight.str() +
                                "): custom labels are defined for alcove weights only");
    ReductionResult red = ctx.reduce(weight);
    if (red.is_singular()) {
        ObjLabel l;
        l.kind_ = kind;
        l.name_ = name;
        l.x_ = ExtAffineElement::identity(weight.rank());
        l.slot_ = weight;
        l.regular_ = false;
        return l;
    }
    switch (kind) {
        case LabelKind::Simple: return simple(ctx, red.x, red.lambda);
        case LabelKind::Weyl: return weyl(ctx, red.x, red.lambda);
        case LabelKind::Custom: return custom(ctx, name, red.x, red.lambda);
        default: break;
    }
    throw std::logic_error("from_weight: unhandled kind");
}

Weight ObjLabel::highest_weight(const EllContext& ctx) const {
    if (kind_ == LabelKind::Tilting || !regular_) return slot_;
    return ctx.dot_act(x_, slot_);
}

Weight ObjLabel::linkage_class(const EllContext& ctx) const {
    if (kind_ == LabelKind::Tilting || !regular_) return ctx.linkage_class(slot_);
    return slot_;
}

std::string ObjLabel::str(const EllContext& ctx) const {
    std::string head;
    switch (kind_) {
        case LabelKind::Simple: head = "L"; break;
        case LabelKind::Weyl: head = "Delta"; break;
        case LabelKind::Tilting: head = "T"; break;
        case LabelKind::Custom: head = name_; break;
    }
    if (kind_ == LabelKind::Tilting || x_.is_identity()) return head + "(" + slot_.str() + ")";
    return head + "(" + ctx.word_of(x_) + ";" + slot_.str() + ")";
}

std::strong_ordering ObjLabel::order(const ObjLabel& rhs) const {
    if (slot_ != rhs.slot_) return slot_ < rhs.slot_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (kind_ != rhs.kind_)
        return kind_rank(kind_) < kind_rank(rhs.kind_) ? std::strong_ordering::less
                                                       : std::strong_ordering::greater;
    if (name_ != rhs.name_) return name_ < rhs.name_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (x_ != rhs.x_) return x_ < rhs.x_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (regular_ != rhs.regular_)
        return regular_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

void RegObject::add(const ObjLabel& label, std::int64_t mult) {
    if (mult == 0) return;
    if (mult < 0) throw std::domain_error("RegObject multiplicities must be positive");
    auto it = std::lower_bound(items_.begin(), items_.end(), label,
                               [](const auto& p, const ObjLabel& l) { return p.first < l; });
    if (it != items_.end() && it->first == label)
        it->second = checked_add(it->second, mult);
    else
        items_.insert(it, {label, mult});
}

RegObject RegObject::filtered_regular() const {
    RegObject out;
    for (const auto& [l, m] : items_)
        if (l.regular()) out.add(l, m);
    return out;
}

std::string RegObject::str(const EllContext& ctx) const {
    if (items_.empty()) return "0";
    std::string s;
    for (const auto& [l, m] : items_) {
        if (!s.empty()) s += " + ";
        if (m != 1) s += std::to_string(m) + "*";
        s += l.str(ctx);
    }
    return s;
}

void PrincipalFusionRule::add_rule(const ExtAffineElement& x, const ExtAffineElement& y, Entry entry) {
    auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
    rules_[std::move(key)] = std::move(entry);
}

bool PrincipalFusionRule::has_rule(const ExtAffineElement& x, const ExtAffineElement& y) const {
    auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
    return rules_.count(key) != 0;
}

const RegObject& PrincipalFusionRule::lookup(const EllContext& ctx, const ExtAffineElement& x,
                                             const ExtAffineElement& y) const {
    auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
    auto it = rules_.find(key);
    if (it == rules_.end())
        throw std::domain_error("no base datum for the pair (" + ctx.word_of(x) + ", " +
                                ctx.word_of(y) + ")");
    if (ctx.ell() < it->second.min_ell)
        throw std::domain_error("rule (" + ctx.word_of(x) + ", " + ctx.word_of(y) +
                                ") requires ell >= " + std::to_string(it->second.min_ell));
    return it->second.out;
}

namespace {

std::vector<int> parse_word(const std::string& word) {
    if (word == "e") return {};
    std::vector<int> letters;
    for (std::size_t i = 0; i < word.size(); i += 2) {
        if (word[i] != 's' || i + 1 >= word.size() || !std::isdigit(word[i + 1]))
            throw std::invalid_argument("bad generator word '" + word + "'");
        letters.push_back(word[i + 1] - '0');
    }
    return letters;
}

ObjLabel label_from_json(const EllContext& ctx, const ordered_json& o) {
    const std::string kind = o.at("kind").get<std::string>();
    const ExtAffineElement x = ctx.element_from_word(parse_word(o.at("w").get<std::string>()));
    const Weight zero(static_cast<std::size_t>(ctx.rs().rank()));
    if (kind == "Simple") return ObjLabel::simple(ctx, x, zero);
    if (kind == "Weyl") return ObjLabel::weyl(ctx, x, zero);
    if (kind == "Custom") return ObjLabel::custom(ctx, o.at("name").get<std::string>(), x, zero);
    throw std::invalid_argument("rule outputs must be Simple, Weyl or Custom labels");
}

} // namespace

std::string PrincipalFusionRule::to_json(const EllContext& ctx) const {
    ordered_json j;
    j["family"] = std::string(1, family_);
    j["rank"] = rank_;
    ordered_json rules = ordered_json::array();
    for (const auto& [key, entry] : rules_) {
        ordered_json r;
        r["x"] = ctx.word_of(key.first);
        r["y"] = ctx.word_of(key.second);
        if (entry.min_ell > 0) r["min_ell"] = entry.min_ell;
        ordered_json out = ordered_json::array();
        for (const auto& [label, mult] : entry.out.items()) {
            for (std::int64_t k = 0; k < mult; ++k) {
                ordered_json o;
                o["kind"] = kind_name(label.kind());
                if (label.kind() == LabelKind::Custom) o["name"] = label.name();
                o["w"] = label.x().is_identity() ? "e" : ctx.word_of(label.x());
                out.push_back(o);
            }
        }
        r["out"] = out;
        rules.push_back(r);
    }
    j["rules"] = rules;
    return j.dump(2);
}

PrincipalFusionRule PrincipalFusionRule::from_json(const EllContext& ctx, const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    const std::string family = j.at("family").get<std::string>();
    const int rank = j.at("rank").get<int>();
    if (family.size() != 1 || family[0] != static_cast<char>(ctx.rs().spec().family) ||
        rank != ctx.rs().rank())
        throw std::domain_error("rule file is for " + family + std::to_string(rank) +
                                ", context is " + ctx.rs().spec().str());
    PrincipalFusionRule rules(family[0], rank);
    for (const auto& r : j.at("rules")) {
        const ExtAffineElement x = ctx.element_from_word(parse_word(r.at("x").get<std::string>()));
        const ExtAffineElement y = ctx.element_from_word(parse_word(r.at("y").get<std::string>()));
        if (!ctx.dominant_alcove(x) || !ctx.dominant_alcove(y))
            throw std::domain_error("rule base words must name W_aff^+ elements");
        Entry entry;
        if (r.contains("min_ell")) entry.min_ell = r.at("min_ell").get<Coord>();
        for (const auto& o : r.at("out")) entry.out.add(label_from_json(ctx, o));
        rules.add_rule(x, y, std::move(entry));
    }
    return rules;
}

PrincipalFusionRule builtin_a2_rules(const EllContext& ctx) {
    if (ctx.rs().spec().family != Family::A || ctx.rs().rank() != 2)
        throw std::domain_error("builtin rules are for A2 only");
    PrincipalFusionRule rules('A', 2);
    const Weight zero(2);
    auto word = [&](std::initializer_list<int> w) { return ctx.element_from_word(std::vector<int>(w)); };

    const ExtAffineElement s0 = word({0});
    const ExtAffineElement s0s1 = word({0, 1});
    const ExtAffineElement s0s2 = word({0, 2});

    // L(s0.l) (x) L(s0.m), generic summand M plus a simple
    {
        PrincipalFusionRule::Entry e;
        e.min_ell = 3;
        e.out.add(ObjLabel::custom(ctx, "M", ExtAffineElement::identity(2), zero));
        e.out.add(ObjLabel::simple(ctx, ExtAffineElement::identity(2), zero));
        rules.add_rule(s0, s0, std::move(e));
    }
    // L(s0s1.l) (x) L(s0s2.m) -> L(t_{alpha_h}.nu) + L(nu); needs ell >= 5
    {
        PrincipalFusionRule::Entry e;
        e.min_ell = 5;
        e.out.add(ObjLabel::simple(ctx, word({0, 1, 2, 1}), zero));
        e.out.add(ObjLabel::simple(ctx, ExtAffineElement::identity(2), zero));
        rules.add_rule(s0s1, s0s2, std::move(e));
    }
    // L(s0s1.l) (x) L(s0s1.m) -> L(s0s1s2s0.nu) + L(s0s2.nu); no extra guard
    {
        PrincipalFusionRule::Entry e;
        e.min_ell = 3;
        e.out.add(ObjLabel::simple(ctx, word({0, 1, 2, 0}), zero));
        e.out.add(ObjLabel::simple(ctx, s0s2, zero));
        rules.add_rule(s0s1, s0s1, std::move(e));
    }

    CustomInfo m;
    m.composition_factors = {{"s0", 2}, {"s0s1", 1}, {"s0s2", 1}, {"e", 1}};
    m.radical_layers = {{"s0"}, {"s0s1", "e", "s0s2"}, {"s0"}};
    m.grothendieck = "[M(nu)] = [T(s0s1.nu)] + [T(s0s2.nu)] - 2*[T(s0.nu)] + 3*[T(nu)]";
    rules.add_custom("M", std::move(m));
    return rules;
}

RegObject translate(const EllContext& ctx, const RegObject& obj, const Weight& nu) {
    if (!ctx.in_fundamental_alcove(nu))
        throw std::domain_error("translate: target " + nu.str() + " is not in C_fund cap X");
    const Weight zero(static_cast<std::size_t>(ctx.rs().rank()));
    RegObject out;
    for (const auto& [label, mult] : obj.items()) {
        if (label.kind() == LabelKind::Tilting) {
            ReductionResult red = ctx.reduce(label.slot());
            if (red.is_singular() || !(red.lambda == zero))
                throw std::domain_error("translate: tilting label " + label.str(ctx) +
                                        " is not in the principal block at slot 0");
            out.add(ObjLabel::tilting(ctx, ctx.dot_act(red.x, nu)), mult);
            continue;
        }
        if (!label.regular() || !(label.slot() == zero))
            throw std::domain_error("translate: label " + label.str(ctx) + " has slot != 0");
        switch (label.kind()) {
            case LabelKind::Simple: out.add(ObjLabel::simple(ctx, label.x(), nu), mult); break;
            case LabelKind::Weyl: out.add(ObjLabel::weyl(ctx, label.x(), nu), mult); break;
            case LabelKind::Custom:
                out.add(ObjLabel::custom(ctx, label.name(), label.x(), nu), mult);
                break;
            default: break;
        }
    }
    return out;
}

RegObject omega_twist(const EllContext& ctx, const RegObject& obj, const OmegaElement& omega) {
    RegObject out;
    for (const auto& [label, mult] : obj.items()) {
        if (label.kind() == LabelKind::Tilting) {
            ReductionResult red = ctx.reduce(label.slot());
            if (red.is_singular())
                throw std::domain_error("omega_twist: singular tilting label");
            out.add(ObjLabel::tilting(ctx, ctx.dot_act(red.x, ctx.dot_act(omega.elem, red.lambda))),
                    mult);
            continue;
        }
        if (!label.regular()) throw std::domain_error("omega_twist: singular label");
        const Weight slot = ctx.dot_act(omega.elem, label.slot());
        switch (label.kind()) {
            case LabelKind::Simple: out.add(ObjLabel::simple(ctx, label.x(), slot), mult); break;
            case LabelKind::Weyl: out.add(ObjLabel::weyl(ctx, label.x(), slot), mult); break;
            case LabelKind::Custom:
                out.add(ObjLabel::custom(ctx, label.name(), label.x(), slot), mult);
                break;
            default: break;
        }
    }
    return out;
}

namespace {

FusionRow slot_row(const EllContext& ctx, const FusionTable* table, const Weight& lambda,
                   const Weight& mu) {
    if (table) {
        const auto& meta = table->meta();
        if (meta.family != static_cast<char>(ctx.rs().spec().family) ||
            meta.rank != ctx.rs().rank() || meta.ell != ctx.ell())
            throw std::domain_error("fusion table is for another context");
        return table->row(lambda, mu);
    }
    return fusion_row(ctx, lambda, mu);
}

} // namespace

namespace {

// In the alcove, standard, costandard, simple and tilting modules coincide,
// so e-based Weyl/Tilting factors are the same object as the simple one.
TensorFactor normalized(const EllContext& ctx, TensorFactor f) {
    if (!ctx.in_fundamental_alcove(f.slot))
        throw std::domain_error("regpart_tensor: slot " + f.slot.str() +
                                " is not in C_fund cap X");
    if (!ctx.dominant_alcove(f.base))
        throw std::domain_error("regpart_tensor: base element is not in W_aff^+");
    if (f.base.is_identity() && (f.kind == LabelKind::Weyl || f.kind == LabelKind::Tilting))
        f.kind = LabelKind::Simple;
    if (f.kind == LabelKind::Tilting)
        throw std::domain_error("regpart_tensor: tilting factor outside the alcove is negligible");
    return f;
}

bool is_unit_factor(const TensorFactor& f) {
    return f.kind == LabelKind::Simple && f.base.is_identity();
}

ObjLabel base_label(const EllContext& ctx, const TensorFactor& f) {
    const Weight zero(f.slot.rank());
    switch (f.kind) {
        case LabelKind::Simple: return ObjLabel::simple(ctx, f.base, zero);
        case LabelKind::Weyl: return ObjLabel::weyl(ctx, f.base, zero);
        case LabelKind::Custom: return ObjLabel::custom(ctx, f.name, f.base, zero);
        default: break;
    }
    throw std::logic_error("base_label: unhandled kind");
}

} // namespace

RegObject regpart_tensor(const EllContext& ctx, const PrincipalFusionRule& rules,
                         const FusionTable* table, const TensorFactor& a_in,
                         const TensorFactor& b_in) {
    const TensorFactor a = normalized(ctx, a_in);
    const TensorFactor b = normalized(ctx, b_in);

    // Base object at slot 0: a seeded simple-simple rule, or the unit law
    // (tensoring by an alcove block acts as a translation functor), which
    // keeps the other factor whole.
    RegObject base_obj;
    if (a.kind == LabelKind::Simple && b.kind == LabelKind::Simple &&
        rules.has_rule(a.base, b.base)) {
        base_obj = rules.lookup(ctx, a.base, b.base);
    } else if (is_unit_factor(b)) {
        base_obj.add(base_label(ctx, a));
    } else if (is_unit_factor(a)) {
        base_obj.add(base_label(ctx, b));
    } else if (a.kind == LabelKind::Simple && b.kind == LabelKind::Simple) {
        base_obj = rules.lookup(ctx, a.base, b.base); // throws "no base datum"
    } else {
        throw std::domain_error("no base datum for factors " + kind_name(a.kind) + ", " +
                                kind_name(b.kind));
    }

    const OmegaElement& oa = a.omega ? *a.omega : ctx.omega_identity();
    const OmegaElement& ob = b.omega ? *b.omega : ctx.omega_identity();
    const OmegaElement& prod = ctx.omega_mul(oa, ob);

    const FusionRow row = slot_row(ctx, table, a.slot, b.slot);
    RegObject out;
    for (const auto& [nu, c] : row) {
        if (c < 0) throw std::logic_error("negative fusion coefficient");
        RegObject block = omega_twist(ctx, translate(ctx, base_obj, nu), prod);
        for (const auto& [label, mult] : block.items()) out.add(label, checked_mul(mult, c));
    }
    return out;
}

RegObject regpart_tensor_obj(const EllContext& ctx, const PrincipalFusionRule& rules,
                             const FusionTable* table, const RegObject& a, const RegObject& b) {
    const RegObject ra = a.filtered_regular();
    const RegObject rb = b.filtered_regular();
    RegObject out;
    for (const auto& [la, ma] : ra.items())
        for (const auto& [lb, mb] : rb.items()) {
            // surviving tilting labels live in the alcove, where x = e
            TensorFactor fa{la.kind(), la.name(), la.x(), la.slot(), std::nullopt};
            TensorFactor fb{lb.kind(), lb.name(), lb.x(), lb.slot(), std::nullopt};
            RegObject prod = regpart_tensor(ctx, rules, table, fa, fb);
            for (const auto& [label, mult] : prod.items())
                out.add(label, checked_mul(mult, checked_mul(ma, mb)));
        }
    return out;
}

Weight linkage_class_of(const EllContext& ctx, const RegObject& obj) {
    if (obj.empty()) throw std::domain_error("linkage_class_of: empty object");
    std::optional<Weight> cls;
    for (const auto& [label, mult] : obj.items()) {
        const Weight c = label.linkage_class(ctx);
        if (!cls)
            cls = c;
        else if (!(*cls == c))
            throw std::domain_error("mixed linkage classes: " + cls->str() + " vs " + c.str());
    }
    return *cls;
}

std::map<Weight, RegObject> blocks_of(const EllContext& ctx, const RegObject& obj) {
    std::map<Weight, RegObject> blocks;
    for (const auto& [label, mult] : obj.items())
        blocks[label.linkage_class(ctx)].add(label, mult);
    return blocks;
}

} // namespace alcove
