#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "alcove/rootsystem.hpp"
#include "alcove/weight.hpp"

namespace alcove {

/// An element t_gamma w of the extended affine Weyl group W_ext = X x| W_fin.
/// Composition follows (t_gamma w)(t_delta v) = t_{gamma + w(delta)} (w v).
class ExtAffineElement {
public:
    ExtAffineElement() = default;
    ExtAffineElement(Weight gamma, FiniteWeylElement w) : gamma_(std::move(gamma)), w_(std::move(w)) {}
    static ExtAffineElement identity(std::size_t rank) {
        return {Weight(rank), FiniteWeylElement::identity(rank)};
    }

    const Weight& gamma() const { return gamma_; }
    const FiniteWeylElement& fin() const { return w_; }
    bool is_identity() const { return gamma_.is_zero() && w_.is_identity(); }

    ExtAffineElement compose(const ExtAffineElement& rhs) const {
        return {gamma_ + w_.apply(rhs.gamma_), w_.compose(rhs.w_)};
    }
    ExtAffineElement inverse() const {
        FiniteWeylElement wi = w_.inverse();
        return {-wi.apply(gamma_), std::move(wi)};
    }

    friend bool operator==(const ExtAffineElement& a, const ExtAffineElement& b) {
        return a.gamma_ == b.gamma_ && a.w_ == b.w_;
    }
    friend bool operator!=(const ExtAffineElement& a, const ExtAffineElement& b) { return !(a == b); }
    friend bool operator<(const ExtAffineElement& a, const ExtAffineElement& b) {
        if (a.gamma_ != b.gamma_) return a.gamma_ < b.gamma_;
        return a.w_ < b.w_;
    }

private:
    Weight gamma_;
    FiniteWeylElement w_;
};

struct SingularWitness {
    std::size_t beta; // positive-root index
    Coord m;          // (lambda + rho, beta^vee) = ell * m
};

/// Outcome of reducing a weight to the fundamental alcove: either a wall
/// witness, or the unique x in W_aff and lambda in C_fund with x . lambda
/// equal to the input.
struct ReductionResult {
    std::optional<SingularWitness> singular;
    ExtAffineElement x;
    Weight lambda;
    int sign = 1;
    Coord length = 0;

    bool is_singular() const { return singular.has_value(); }
};

/// Element of Omega = Stab_{W_ext}(C_fund), decorated with its class in
/// X/ZPhi (the canonical coset label from the root system).
struct OmegaElement {
    ExtAffineElement elem;
    std::vector<Coord> class_label;
    std::size_t index = 0; // position in EllContext::omega_group()

    bool is_identity() const { return elem.is_identity(); }
};

/// Root system together with the dilation parameter ell >= h.  Immutable
/// after construction; all operations are pure and safe to share.
class EllContext {
public:
    EllContext(std::shared_ptr<const RootSystem> rs, Coord ell);

    const RootSystem& rs() const { return *rs_; }
    std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }
    Coord ell() const { return ell_; }

    /// The ell-dilated dot action: ell*gamma + w(lambda + rho) - rho.
    Weight dot_act(const ExtAffineElement& x, const Weight& lambda) const;

    std::optional<SingularWitness> is_singular(const Weight& lambda) const;
    bool in_fundamental_alcove(const Weight& lambda) const;

    /// Weights of C_fund cap X in lexicographic order.
    const std::vector<Weight>& alcove_weights() const { return alcove_weights_; }

    ReductionResult reduce(const Weight& tau) const;

    /// Representative of the W_aff dot-orbit in the closed fundamental
    /// domain; defined for singular weights as well.
    Weight linkage_class(const Weight& tau) const;

    /// Number of hyperplanes separating C_fund from x . C_fund.  Extends the
    /// Coxeter length of W_aff to all of W_ext (zero exactly on Omega).
    Coord length(const ExtAffineElement& x) const;

    bool in_waff(const ExtAffineElement& x) const { return rs_->in_root_lattice(x.gamma()); }
    /// det of the finite part; equals (-1)^length on W_aff.  Throws off W_aff.
    int sign(const ExtAffineElement& x) const;

    const std::vector<OmegaElement>& omega_group() const { return omega_; }
    const OmegaElement& omega_of(const ExtAffineElement& x) const;
    const OmegaElement& omega_identity() const { return omega_[0]; }
    const OmegaElement& omega_mul(const OmegaElement& a, const OmegaElement& b) const;
    const OmegaElement& omega_inverse(const OmegaElement& a) const;
    /// The omega with omega . 0 == lambda, if lambda lies in the orbit Omega . 0.
    std::optional<OmegaElement> principal_omega(const Weight& lambda) const;

    /// Affine simple reflections; index 0 is s_0 = t_{alpha_h} s_{alpha_h},
    /// index i >= 1 is the reflection in the i-th simple root.
    const ExtAffineElement& generator(std::size_t i) const { return gens_[i]; }
    std::size_t generator_count() const { return gens_.size(); }
    ExtAffineElement element_from_word(const std::vector<int>& letters) const;
    /// Canonical reduced word of x in W_aff ("e" for the identity).
    std::string word_of(ExtAffineElement x) const;

    /// Whether x . C_fund is a dominant alcove.
    bool dominant_alcove(const ExtAffineElement& x) const;

    /// All elements with length <= max_len, BFS by word length with the fixed
    /// generator order; pairs (element, length).  W_aff only.
    std::vector<std::pair<ExtAffineElement, Coord>> enumerate_ball(Coord max_len) const;
    /// The dominant ones (W_aff^+); with extended=true each element is also
    /// combined with every omega, giving W_ext^+.
    std::vector<ExtAffineElement> enumerate_dominant(Coord max_len, bool extended = false) const;

    struct XLambda {
        ExtAffineElement x; // in W_aff^+
        Weight lambda;      // in C_fund cap X
    };
    /// Factor a dominant ell-regular weight as x . lambda.  Throws
    /// std::domain_error on singular or non-dominant input.
    XLambda weight_to_xlambda(const Weight& tau) const;

private:
    std::shared_ptr<const RootSystem> rs_;
    Coord ell_;
    std::vector<Weight> alcove_weights_;
    std::vector<ExtAffineElement> gens_;
    std::vector<OmegaElement> omega_;

    struct Walk {
        ExtAffineElement x;
        std::vector<Coord> point; // final scaled point
    };
    // Walk a scaled point (coordinates times `scale`) into the window
    // (0, scale*ell) per positive root when `closure` is false, or into
    // [0, scale*ell] when true.  Returns the accumulated group element x
    // with x . (final) = (initial).
    Walk walk_to_alcove(std::vector<Coord> scaled, Coord scale, bool closure) const;
    Coord separation_count(const std::vector<Coord>& scaled, Coord scale) const;
    void build_omega();
};

} // namespace alcove
