#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "alcove/weight.hpp"

namespace alcove {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);

struct RootSystemSpec {
    Family family;
    int rank;

    /// Throws std::invalid_argument unless the rank is admissible
    /// (A: >=1, B: >=2, C: >=2, D: >=3, E: 6..8, F: 4, G: 2).
    void validate() const;
    std::string str() const; // e.g. "A2"
};

/// An element of the finite Weyl group, stored as its matrix on
/// fundamental-weight coordinates (columns indexed by input coordinate).
class FiniteWeylElement {
public:
    FiniteWeylElement() = default;
    static FiniteWeylElement identity(std::size_t rank);
    /// matrix rows; det must be +-1 and is verified.
    FiniteWeylElement(std::vector<std::vector<Coord>> m, int det);

    std::size_t rank() const { return m_.size(); }
    int det() const { return det_; }
    bool is_identity() const;

    Weight apply(const Weight& w) const;
    FiniteWeylElement compose(const FiniteWeylElement& rhs) const; // this o rhs
    FiniteWeylElement inverse() const;

    const std::vector<std::vector<Coord>>& matrix() const { return m_; }

    friend bool operator==(const FiniteWeylElement& a, const FiniteWeylElement& b) {
        return a.m_ == b.m_;
    }
    friend bool operator<(const FiniteWeylElement& a, const FiniteWeylElement& b) {
        return a.m_ < b.m_;
    }

private:
    std::vector<std::vector<Coord>> m_;
    int det_ = 1;
};

/// One positive root, carrying every expansion the rest of the library needs:
///   coords     -- the root in fundamental-weight coordinates,
///   coroot     -- expansion of its coroot over the simple coroots, so that
///                 (lambda, beta^vee) is the dot product coroot . lambda,
///   expansion  -- expansion of the root over the simple roots,
///   half_norm  -- (beta,beta)/2 in the normalization where short simple
///                 roots have half-norm 1.
struct PositiveRoot {
    Weight coords;
    std::vector<Coord> coroot;
    std::vector<Coord> expansion;
    Coord half_norm = 1;

    Coord height() const {
        Coord h = 0;
        for (Coord e : expansion) h += e;
        return h;
    }
    Coord coroot_height() const {
        Coord h = 0;
        for (Coord c : coroot) h += c;
        return h;
    }
};

/// Immutable root-system datum for one simple type.  Everything is generated
/// from the Cartan matrix by reflection closure; no per-type tables beyond
/// the matrix itself.  Safe to share read-only across threads.
class RootSystem {
public:
    static std::shared_ptr<const RootSystem> build(const RootSystemSpec& spec);

    const RootSystemSpec& spec() const { return spec_; }
    int rank() const { return spec_.rank; }
    const std::vector<std::vector<Coord>>& cartan() const { return cartan_; }
    const std::vector<PositiveRoot>& positive_roots() const { return roots_; }
    const Weight& rho() const { return rho_; }
    const PositiveRoot& highest_root() const { return roots_[highest_root_]; }
    const PositiveRoot& highest_short_root() const { return roots_[highest_short_root_]; }
    std::size_t highest_short_root_index() const { return highest_short_root_; }
    Coord coxeter_number() const { return h_; }
    Coord fundamental_group_order() const { return f_; }
    Weight fundamental_weight(std::size_t i) const;

    /// (lambda, beta^vee) for the beta-th positive root.
    Coord pair(const Weight& lambda, std::size_t beta) const;

    /// Simple reflections as Weyl elements; index 0..rank-1 for alpha_1..alpha_rank.
    const FiniteWeylElement& simple_reflection(std::size_t i) const { return simple_refl_[i]; }
    /// Reflection in an arbitrary positive root.
    const FiniteWeylElement& reflection(std::size_t beta) const { return refl_[beta]; }
    const FiniteWeylElement& longest_element() const { return w0_; }

    /// Unique dominant weight in the W_fin-orbit (plain linear action) and a
    /// witness w with w(lambda) = result.
    std::pair<Weight, FiniteWeylElement> dominant_representative(const Weight& lambda) const;
    Weight w0_image(const Weight& lambda) const { return w0_.apply(lambda); }

    /// Expansion of lambda over the simple roots, if lambda is in the root
    /// lattice tensored with Q it always exists; returns nullopt when the
    /// rational solution is not integral.
    std::optional<std::vector<Coord>> expand_in_simple_roots(const Weight& lambda) const;
    bool in_root_lattice(const Weight& lambda) const;

    /// Canonical label of lambda + ZPhi in X/ZPhi, as residues along the
    /// diagonalized Cartan matrix.  Equal labels <=> same coset.
    std::vector<Coord> coset_label(const Weight& lambda) const;

    /// Half-norm (beta,beta)/2 of the i-th simple root (1 for short ones).
    Coord simple_half_norm(std::size_t i) const { return d_[i]; }

private:
    RootSystem() = default;

    RootSystemSpec spec_{};
    std::vector<std::vector<Coord>> cartan_; // cartan_[i][j] = (alpha_j, alpha_i^vee)
    std::vector<PositiveRoot> roots_;
    Weight rho_;
    std::size_t highest_root_ = 0;
    std::size_t highest_short_root_ = 0;
    Coord h_ = 0;
    Coord f_ = 1;
    std::vector<Coord> d_;
    std::vector<FiniteWeylElement> simple_refl_;
    std::vector<FiniteWeylElement> refl_;
    FiniteWeylElement w0_;

    // Smith data for X/ZPhi: diag_ = U * cartan * V with U, V unimodular;
    // uinv_ holds U.
    std::vector<Coord> diag_;
    std::vector<std::vector<Coord>> uinv_;

    // adjugate/determinant of the Cartan matrix, for exact expansion solves.
    std::vector<std::vector<Coord>> cartan_adj_;
    Coord cartan_det_ = 1;
};

} // namespace alcove
