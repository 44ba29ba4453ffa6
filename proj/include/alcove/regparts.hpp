#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alcove/affine.hpp"
#include "alcove/fusion.hpp"
#include "alcove/weight.hpp"

namespace alcove {

enum class LabelKind { Simple, Weyl, Tilting, Custom };

std::string kind_name(LabelKind k);

/// Label of an indecomposable module up to isomorphism.  Regular Simple,
/// Weyl and Custom labels are kept canonical as (x in W_aff^+, slot in
/// C_fund cap X); any Omega-decoration of x is folded into the slot, which
/// makes the representation unique.  Tilting labels carry a plain dominant
/// weight, and ell-singular Simple/Weyl labels keep their weight with x = e.
class ObjLabel {
public:
    static ObjLabel simple(const EllContext& ctx, const ExtAffineElement& x, const Weight& slot);
    static ObjLabel weyl(const EllContext& ctx, const ExtAffineElement& x, const Weight& slot);
    static ObjLabel custom(const EllContext& ctx, std::string name, const ExtAffineElement& x,
                           const Weight& slot);
    static ObjLabel tilting(const EllContext& ctx, const Weight& weight);
    /// Label of the given kind with the given highest weight.
    static ObjLabel from_weight(const EllContext& ctx, LabelKind kind, const Weight& weight,
                                const std::string& name = "");

    LabelKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const ExtAffineElement& x() const { return x_; }
    const Weight& slot() const { return slot_; }
    bool regular() const { return regular_; }

    Weight highest_weight(const EllContext& ctx) const;
    Weight linkage_class(const EllContext& ctx) const;
    std::string str(const EllContext& ctx) const;

    // canonical ordering: by slot, then kind, name and base element; groups
    // the members of one linkage block together in printed output
    std::strong_ordering order(const ObjLabel& rhs) const;
    friend bool operator==(const ObjLabel& a, const ObjLabel& b) {
        return a.order(b) == std::strong_ordering::equal;
    }
    friend bool operator<(const ObjLabel& a, const ObjLabel& b) {
        return a.order(b) == std::strong_ordering::less;
    }

private:
    LabelKind kind_ = LabelKind::Simple;
    std::string name_;
    ExtAffineElement x_;
    Weight slot_;
    bool regular_ = true;
};

/// Multiset of labels; the empty multiset is the zero object.
class RegObject {
public:
    RegObject() = default;

    void add(const ObjLabel& label, std::int64_t mult = 1);
    bool empty() const { return items_.empty(); }
    const std::vector<std::pair<ObjLabel, std::int64_t>>& items() const { return items_; }

    RegObject filtered_regular() const;
    std::string str(const EllContext& ctx) const;

    friend bool operator==(const RegObject& a, const RegObject& b) { return a.items_ == b.items_; }

private:
    std::vector<std::pair<ObjLabel, std::int64_t>> items_; // sorted, mults positive
};

/// Metadata for a named non-standard indecomposable shipped with a rule set.
struct CustomInfo {
    std::map<std::string, std::int64_t> composition_factors; // word -> multiplicity
    std::vector<std::vector<std::string>> radical_layers;    // top to socle
    std::string grothendieck; // documentation only, printed by `info`
};

/// Base fusion data for the principal block: for seeded unordered pairs
/// (x, y) of W_aff^+ elements, the regular part of the tensor product of the
/// corresponding simple modules at slot 0.  Unseeded pairs are an error; the
/// data is a plug-in, not something this library can derive.
class PrincipalFusionRule {
public:
    struct Entry {
        Coord min_ell = 0;
        RegObject out; // labels at slot 0
    };

    PrincipalFusionRule(char family, int rank) : family_(family), rank_(rank) {}

    char family() const { return family_; }
    int rank() const { return rank_; }

    void add_rule(const ExtAffineElement& x, const ExtAffineElement& y, Entry entry);
    void add_custom(const std::string& name, CustomInfo info) { customs_[name] = std::move(info); }

    bool has_rule(const ExtAffineElement& x, const ExtAffineElement& y) const;
    /// Throws std::domain_error when the pair is unseeded ("no base datum")
    /// or the rule's min_ell guard rejects ctx.
    const RegObject& lookup(const EllContext& ctx, const ExtAffineElement& x,
                            const ExtAffineElement& y) const;

    const std::map<std::string, CustomInfo>& customs() const { return customs_; }
    const std::map<std::pair<ExtAffineElement, ExtAffineElement>, Entry>& rules() const {
        return rules_;
    }

    std::string to_json(const EllContext& ctx) const;
    static PrincipalFusionRule from_json(const EllContext& ctx, const std::string& text);

private:
    char family_;
    int rank_;
    std::map<std::pair<ExtAffineElement, ExtAffineElement>, Entry> rules_;
    std::map<std::string, CustomInfo> customs_;
};

/// The rule rows of the type A2 examples: (s0,s0) with the generic summand M,
/// (s0s1,s0s2) and (s0s1,s0s1) from the Frobenius-twist decompositions, plus
/// composition-series metadata for M.  Unit rows (x, e) are handled
/// structurally by the engine for every type.
PrincipalFusionRule builtin_a2_rules(const EllContext& ctx);

/// Replace the weight slot 0 by nu in every label.
RegObject translate(const EllContext& ctx, const RegObject& obj, const Weight& nu);
/// Transport every label along omega: slots move by the dot action of omega.
RegObject omega_twist(const EllContext& ctx, const RegObject& obj, const OmegaElement& omega);

/// One tensor factor as the engine consumes it: an indecomposable of the
/// given kind with label base . (omega . slot).
struct TensorFactor {
    LabelKind kind = LabelKind::Simple;
    std::string name;
    ExtAffineElement base;
    Weight slot;
    std::optional<OmegaElement> omega; // default: identity
};

/// Regular part of the tensor product of two factors, assembled from the
/// base rule at slot 0, the fusion multiplicities of the slots, and the
/// Omega-decorations.  `table` may be null, in which case rows are computed
/// directly.
RegObject regpart_tensor(const EllContext& ctx, const PrincipalFusionRule& rules,
                         const FusionTable* table, const TensorFactor& a, const TensorFactor& b);

/// Bilinear extension to label multisets, with the regular-part pre-filter
/// (non-regular labels are dropped before expanding).
RegObject regpart_tensor_obj(const EllContext& ctx, const PrincipalFusionRule& rules,
                             const FusionTable* table, const RegObject& a, const RegObject& b);

/// Common linkage class of all labels; std::domain_error when empty or mixed.
Weight linkage_class_of(const EllContext& ctx, const RegObject& obj);

/// Labels grouped by linkage class, each group a RegObject.
std::map<Weight, RegObject> blocks_of(const EllContext& ctx, const RegObject& obj);

} // namespace alcove
