#include "alcove/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "alcove/checked.hpp"
#include "alcove/intmat.hpp"

namespace alcove {

Family family_from_char(char c) {
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        case 'E': return Family::E;
        case 'F': return Family::F;
        case 'G': return Family::G;
        default: throw std::invalid_argument(std::string("unknown family '") + c + "'");
    }
}

void RootSystemSpec::validate() const {
    auto bad = [&] {
        throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for family " +
                                    std::string(1, static_cast<char>(family)));
    };
    if (rank < 1) bad();
    switch (family) {
        case Family::A: break;
        case Family::B:
        case Family::C:
            if (rank < 2) bad();
            break;
        case Family::D:
            if (rank < 3) bad();
            break;
        case Family::E:
            if (rank < 6 || rank > 8) bad();
            break;
        case Family::F:
            if (rank != 4) bad();
            break;
        case Family::G:
            if (rank != 2) bad();
            break;
    }
}

std::string RootSystemSpec::str() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

FiniteWeylElement FiniteWeylElement::identity(std::size_t rank) {
    std::vector<std::vector<Coord>> m(rank, std::vector<Coord>(rank, 0));
    for (std::size_t i = 0; i < rank; ++i) m[i][i] = 1;
    return FiniteWeylElement(std::move(m), 1);
}

FiniteWeylElement::FiniteWeylElement(std::vector<std::vector<Coord>> m, int det)
    : m_(std::move(m)), det_(det) {
    if (det_ != 1 && det_ != -1) throw std::invalid_argument("Weyl element determinant must be +-1");
}

bool FiniteWeylElement::is_identity() const {
    for (std::size_t i = 0; i < m_.size(); ++i)
        for (std::size_t j = 0; j < m_.size(); ++j)
            if (m_[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

Weight FiniteWeylElement::apply(const Weight& w) const {
    Weight r(m_.size());
    for (std::size_t i = 0; i < m_.size(); ++i) {
        Coord s = 0;
        for (std::size_t j = 0; j < m_.size(); ++j) s += m_[i][j] * w[j];
        r[i] = s;
    }
    return r;
}

FiniteWeylElement FiniteWeylElement::compose(const FiniteWeylElement& rhs) const {
    const std::size_t n = m_.size();
    std::vector<std::vector<Coord>> r(n, std::vector<Coord>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Coord a = m_[i][k];
            if (a == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] += a * rhs.m_[k][j];
        }
    return FiniteWeylElement(std::move(r), det_ * rhs.det_);
}

FiniteWeylElement FiniteWeylElement::inverse() const {
    // det = +-1, so the inverse is det * adjugate, which is integral.
    auto inv = intmat::adjugate(m_);
    if (det_ == -1)
        for (auto& row : inv)
            for (Coord& v : row) v = -v;
    return FiniteWeylElement(std::move(inv), det_);
}

namespace {

// cartan[i][j] = (alpha_j, alpha_i^vee); column j holds the fundamental-weight
// coordinates of alpha_j.  Bourbaki numbering throughout.
std::vector<std::vector<Coord>> cartan_matrix(const RootSystemSpec& spec) {
    const int n = spec.rank;
    std::vector<std::vector<Coord>> c(n, std::vector<Coord>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto bond = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
    switch (spec.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            break;
        case Family::B: // alpha_n short: (alpha_{n-1}, alpha_n^vee) = -2
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            c[n - 1][n - 2] = -2;
            break;
        case Family::C: // alpha_n long: (alpha_n, alpha_{n-1}^vee) = -2
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            c[n - 2][n - 1] = -2;
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
            bond(n - 3, n - 1);
            break;
        case Family::E:
            // chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4
            bond(0, 2);
            for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
            bond(1, 3);
            break;
        case Family::F: // 1-2=>3-4 with alpha_3, alpha_4 short
            bond(0, 1);
            bond(2, 3);
            c[2][1] = -2;
            c[1][2] = -1;
            break;
        case Family::G: // alpha_1 short, alpha_2 long
            c[0][1] = -3;
            c[1][0] = -1;
            break;
    }
    return c;
}

// Integer symmetrizer: d_i = (alpha_i, alpha_i)/2, normalized so short = 1.
// Determined by d_i * c[i][j] = d_j * c[j][i] along the Dynkin graph; the
// seed 6 keeps every intermediate value integral for ratios 2 and 3.
std::vector<Coord> symmetrizer(const std::vector<std::vector<Coord>>& c) {
    const std::size_t n = c.size();
    std::vector<Coord> d(n, 0);
    d[0] = 6;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || c[i][j] == 0) continue;
                if (d[i] != 0 && d[j] == 0) {
                    d[j] = exact_div(d[i] * c[i][j], c[j][i]);
                    changed = true;
                }
            }
    }
    Coord mn = d[0];
    for (Coord v : d) mn = std::min(mn, v);
    for (Coord& v : d) v = exact_div(v, mn);
    return d;
}

struct SmithData {
    std::vector<Coord> diag;
    std::vector<std::vector<Coord>> u; // diag = U * A * V, V untracked
};

// Diagonalize by unimodular row/column operations, tracking row ops only.
// Full divisibility normalization is unnecessary: membership and coset
// labels only need some unimodular diagonalization.
SmithData smith_diagonalize(std::vector<std::vector<Coord>> a) {
    const std::size_t n = a.size();
    SmithData s;
    s.u.assign(n, std::vector<Coord>(n, 0));
    for (std::size_t i = 0; i < n; ++i) s.u[i][i] = 1;

    auto row_axpy = [&](std::size_t dst, std::size_t src, Coord k) {
        for (std::size_t j = 0; j < n; ++j) {
            a[dst][j] += k * a[src][j];
            s.u[dst][j] += k * s.u[src][j];
        }
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, Coord k) {
        for (std::size_t i = 0; i < n; ++i) a[i][dst] += k * a[i][src];
    };

    for (std::size_t t = 0; t < n; ++t) {
        // move a nonzero pivot of minimal absolute value into (t,t)
        while (true) {
            std::size_t pi = t, pj = t;
            Coord best = 0;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 && (best == 0 || std::abs(a[i][j]) < std::abs(best))) {
                        best = a[i][j];
                        pi = i;
                        pj = j;
                    }
            if (best == 0) throw std::logic_error("Cartan matrix is singular");
            if (pi != t) {
                std::swap(a[pi], a[t]);
                std::swap(s.u[pi], s.u[t]);
            }
            if (pj != t)
                for (std::size_t i = 0; i < n; ++i) std::swap(a[i][pj], a[i][t]);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i)
                if (a[i][t] != 0) {
                    row_axpy(i, t, -(a[i][t] / a[t][t]));
                    if (a[i][t] != 0) clean = false;
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (a[t][j] != 0) {
                    col_axpy(j, t, -(a[t][j] / a[t][t]));
                    if (a[t][j] != 0) clean = false;
                }
            if (clean) break;
        }
    }
    s.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.diag[i] = std::abs(a[i][i]);
    return s;
}

} // namespace

std::shared_ptr<const RootSystem> RootSystem::build(const RootSystemSpec& spec) {
    spec.validate();
    auto rs = std::shared_ptr<RootSystem>(new RootSystem());
    rs->spec_ = spec;
    const std::size_t n = static_cast<std::size_t>(spec.rank);
    rs->cartan_ = cartan_matrix(spec);
    rs->d_ = symmetrizer(rs->cartan_);
    rs->rho_ = Weight(std::vector<Coord>(n, 1));

    // Simple roots as seeds.
    std::vector<PositiveRoot> seeds(n);
    for (std::size_t j = 0; j < n; ++j) {
        PositiveRoot r;
        r.coords = Weight(n);
        for (std::size_t i = 0; i < n; ++i) r.coords[i] = rs->cartan_[i][j];
        r.coroot.assign(n, 0);
        r.coroot[j] = 1;
        r.expansion.assign(n, 0);
        r.expansion[j] = 1;
        r.half_norm = rs->d_[j];
        seeds[j] = r;
    }

    // Reflection closure.  Reflecting beta in the simple root alpha_i:
    //   coords   -= (beta, alpha_i^vee) * coords(alpha_i)
    //   coroot   -= (alpha_i, beta^vee) * e_i
    //   expansion-= (beta, alpha_i^vee) * e_i
    std::map<std::vector<Coord>, PositiveRoot> all; // keyed by coords
    std::vector<PositiveRoot> queue = seeds;
    for (auto& r : seeds) all[r.coords.coords()] = r;
    while (!queue.empty()) {
        std::vector<PositiveRoot> next;
        for (const auto& r : queue) {
            for (std::size_t i = 0; i < n; ++i) {
                const Coord pairing = r.coords[i]; // (beta, alpha_i^vee)
                Coord co_pairing = 0;              // (alpha_i, beta^vee)
                for (std::size_t k = 0; k < n; ++k) co_pairing += r.coroot[k] * rs->cartan_[k][i];
                PositiveRoot s = r;
                for (std::size_t k = 0; k < n; ++k) s.coords[k] -= pairing * rs->cartan_[k][i];
                s.coroot[i] -= co_pairing;
                s.expansion[i] -= pairing;
                if (all.emplace(s.coords.coords(), s).second) next.push_back(s);
            }
        }
        queue = std::move(next);
    }

    // Keep the positive half, ordered: simple roots first (in index order),
    // then by height and coordinates so the layout is deterministic.
    std::vector<PositiveRoot> pos;
    for (auto& [k, r] : all) {
        bool nonneg = true, nonpos = true;
        for (Coord e : r.expansion) {
            if (e < 0) nonneg = false;
            if (e > 0) nonpos = false;
        }
        if (nonneg && !nonpos) pos.push_back(r);
    }
    std::sort(pos.begin(), pos.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a.coords < b.coords;
    });
    std::stable_sort(pos.begin(), pos.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
        // keep simple roots (height 1) in simple-root index order
        if (a.height() == 1 && b.height() == 1) {
            std::size_t ia = 0, ib = 0;
            for (std::size_t k = 0; k < a.expansion.size(); ++k) {
                if (a.expansion[k] == 1) ia = k;
                if (b.expansion[k] == 1) ib = k;
            }
            return ia < ib;
        }
        return false;
    });
    rs->roots_ = std::move(pos);

    // Highest root by height; highest short root by coroot height.
    for (std::size_t b = 0; b < rs->roots_.size(); ++b) {
        if (rs->roots_[b].height() > rs->roots_[rs->highest_root_].height()) rs->highest_root_ = b;
        if (rs->roots_[b].coroot_height() > rs->roots_[rs->highest_short_root_].coroot_height())
            rs->highest_short_root_ = b;
    }
    rs->h_ = rs->roots_[rs->highest_short_root_].coroot_height() + 1;

    // Reflection matrices: s_beta = I - coords(beta) (x) coroot(beta).
    for (std::size_t b = 0; b < rs->roots_.size(); ++b) {
        std::vector<std::vector<Coord>> m(n, std::vector<Coord>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            m[i][i] = 1;
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] -= rs->roots_[b].coords[i] * rs->roots_[b].coroot[j];
        }
        rs->refl_.emplace_back(std::move(m), -1);
    }
    for (std::size_t i = 0; i < n; ++i) rs->simple_refl_.push_back(rs->refl_[i]);

    // Longest element by greedy descent: push rho downward until antidominant.
    FiniteWeylElement w = FiniteWeylElement::identity(n);
    Weight img = rs->rho_;
    while (true) {
        std::size_t i = 0;
        while (i < n && img[i] <= 0) ++i;
        if (i == n) break;
        w = rs->simple_refl_[i].compose(w);
        img = rs->simple_refl_[i].apply(img);
    }
    rs->w0_ = w;

    auto smith = smith_diagonalize(rs->cartan_);
    rs->diag_ = smith.diag;
    rs->uinv_ = smith.u;
    rs->f_ = 1;
    for (Coord dgn : rs->diag_) rs->f_ = checked_mul(rs->f_, dgn);

    rs->cartan_det_ = intmat::det(rs->cartan_);
    rs->cartan_adj_ = intmat::adjugate(rs->cartan_);
    return rs;
}

Weight RootSystem::fundamental_weight(std::size_t i) const {
    Weight w(static_cast<std::size_t>(rank()));
    w[i] = 1;
    return w;
}

Coord RootSystem::pair(const Weight& lambda, std::size_t beta) const {
    if (beta >= roots_.size()) throw std::out_of_range("positive-root index out of range");
    Coord s = 0;
    for (std::size_t j = 0; j < lambda.rank(); ++j) s += roots_[beta].coroot[j] * lambda[j];
    return s;
}

std::pair<Weight, FiniteWeylElement> RootSystem::dominant_representative(const Weight& lambda) const {
    Weight cur = lambda;
    FiniteWeylElement w = FiniteWeylElement::identity(cur.rank());
    while (true) {
        std::size_t i = 0;
        while (i < cur.rank() && cur[i] >= 0) ++i;
        if (i == cur.rank()) break;
        cur = simple_refl_[i].apply(cur);
        w = simple_refl_[i].compose(w);
    }
    return {cur, w};
}

std::optional<std::vector<Coord>> RootSystem::expand_in_simple_roots(const Weight& lambda) const {
    const std::size_t n = lambda.rank();
    std::vector<Coord> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Coord s = 0;
        for (std::size_t j = 0; j < n; ++j) s += cartan_adj_[i][j] * lambda[j];
        if (s % cartan_det_ != 0) return std::nullopt;
        out[i] = s / cartan_det_;
    }
    return out;
}

bool RootSystem::in_root_lattice(const Weight& lambda) const {
    return expand_in_simple_roots(lambda).has_value();
}

std::vector<Coord> RootSystem::coset_label(const Weight& lambda) const {
    const std::size_t n = lambda.rank();
    std::vector<Coord> label(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Coord s = 0;
        for (std::size_t j = 0; j < n; ++j) s += uinv_[i][j] * lambda[j];
        const Coord m = diag_[i];
        label[i] = ((s % m) + m) % m;
    }
    return label;
}

} // namespace alcove
