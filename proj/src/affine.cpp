#include "alcove/affine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace alcove {

namespace {

// Hyperplanes H_{beta,m} separating the open fundamental window (0, L) from
// a pairing value p (p on a wall contributes nothing for that wall).
Coord wall_count(Coord p, Coord L) {
    if (p > 0) return (p - 1) / L;
    if (p == 0) return 0;
    return (-p + L - 1) / L;
}

} // namespace

EllContext::EllContext(std::shared_ptr<const RootSystem> rs, Coord ell) : rs_(std::move(rs)), ell_(ell) {
    if (ell_ < rs_->coxeter_number())
        throw std::invalid_argument("ell = " + std::to_string(ell_) + " below Coxeter number " +
                                    std::to_string(rs_->coxeter_number()));

    const std::size_t n = static_cast<std::size_t>(rs_->rank());

    // s_0 = t_{alpha_h} s_{alpha_h} for the highest short root, then the
    // finite simple reflections.
    const auto& ah = rs_->highest_short_root();
    gens_.push_back({ah.coords, rs_->reflection(rs_->highest_short_root_index())});
    for (std::size_t i = 0; i < n; ++i) gens_.push_back({Weight(n), rs_->simple_reflection(i)});

    // C_fund cap X: the binding wall is the highest short coroot, whose
    // coefficients bound the scan (sum c_i (lambda_i + 1) < ell prunes the
    // box to the alcove simplex).
    const auto& hs = rs_->highest_short_root().coroot;
    Coord base = 0;
    for (std::size_t i = 0; i < n; ++i) base += hs[i]; // lambda = 0 pairing of rho
    std::vector<Coord> cur(n, 0);
    std::vector<Weight> found;
    auto scan = [&](auto&& self, std::size_t pos, Coord partial) -> void {
        if (partial >= ell_) return;
        if (pos == n) {
            Weight w(cur);
            if (in_fundamental_alcove(w)) found.push_back(w);
            return;
        }
        for (Coord v = 0; partial + v * hs[pos] < ell_; ++v) {
            cur[pos] = v;
            self(self, pos + 1, partial + v * hs[pos]);
        }
        cur[pos] = 0;
    };
    scan(scan, 0, base);
    std::sort(found.begin(), found.end());
    alcove_weights_ = std::move(found);

    build_omega();
}

Weight EllContext::dot_act(const ExtAffineElement& x, const Weight& lambda) const {
    return ell_ * x.gamma() + x.fin().apply(lambda + rs_->rho()) - rs_->rho();
}

std::optional<SingularWitness> EllContext::is_singular(const Weight& lambda) const {
    const Weight shifted = lambda + rs_->rho();
    for (std::size_t b = 0; b < rs_->positive_roots().size(); ++b) {
        const Coord p = rs_->pair(shifted, b);
        if (p % ell_ == 0) return SingularWitness{b, p / ell_};
    }
    return std::nullopt;
}

bool EllContext::in_fundamental_alcove(const Weight& lambda) const {
    const Weight shifted = lambda + rs_->rho();
    for (std::size_t b = 0; b < rs_->positive_roots().size(); ++b) {
        const Coord p = rs_->pair(shifted, b);
        if (p <= 0 || p >= ell_) return false;
    }
    return true;
}

Coord EllContext::separation_count(const std::vector<Coord>& scaled, Coord scale) const {
    const Coord L = scale * ell_;
    Coord total = 0;
    for (std::size_t b = 0; b < rs_->positive_roots().size(); ++b) {
        Coord p = scale * rs_->pair(rs_->rho(), b);
        const auto& co = rs_->positive_roots()[b].coroot;
        for (std::size_t j = 0; j < scaled.size(); ++j) p += co[j] * scaled[j];
        total += wall_count(p, L);
    }
    return total;
}

EllContext::Walk EllContext::walk_to_alcove(std::vector<Coord> scaled, Coord scale, bool closure) const {
    const std::size_t n = scaled.size();
    const Coord L = scale * ell_;
    ExtAffineElement acc = ExtAffineElement::identity(n);

    // Pairings of (point + rho) against every positive coroot.
    auto pairing = [&](std::size_t b) {
        Coord p = scale * rs_->pair(rs_->rho(), b);
        const auto& co = rs_->positive_roots()[b].coroot;
        for (std::size_t j = 0; j < n; ++j) p += co[j] * scaled[j];
        return p;
    };

    // Each reflection crosses a hyperplane separating the current point from
    // C_fund, so the separation count strictly decreases; the cap is a
    // safety net, not a tuning knob.
    for (Coord guard = 0; ; ++guard) {
        if (guard > 100000) throw std::logic_error("alcove walk failed to terminate");
        std::size_t beta = 0;
        Coord p = 0;
        bool offending = false;
        for (std::size_t b = 0; b < rs_->positive_roots().size(); ++b) {
            p = pairing(b);
            const bool inside = closure ? (p >= 0 && p <= L) : (p > 0 && p < L);
            if (!inside) {
                beta = b;
                offending = true;
                break;
            }
        }
        if (!offending) break;
        if (!closure && p % L == 0)
            throw std::logic_error("regular alcove walk hit a wall");

        // Nearest wall of the offending root on the C_fund side of the point.
        Coord m;
        if (p >= L)
            m = (p % L == 0) ? p / L - 1 : p / L;
        else // p <= 0
            m = (p % L == 0) ? p / L + 1 : -((-p) / L);
        // Reflect: point -= (pairing - ell*m) * beta, in scaled coordinates.
        const Coord excess = p - m * L;
        const auto& root = rs_->positive_roots()[beta];
        for (std::size_t j = 0; j < n; ++j) scaled[j] -= excess * root.coords[j];
        // Accumulate t_{m beta} s_beta on the right of x^{-1}; equivalently
        // x = r_1 r_2 ... r_k satisfies x . (final point) = (initial point).
        ExtAffineElement r{m * root.coords, rs_->reflection(beta)};
        acc = acc.compose(r); // note: acc collects r_1 r_2 ... in order
    }
    return {acc, std::move(scaled)};
}

ReductionResult EllContext::reduce(const Weight& tau) const {
    ReductionResult res;
    if (auto w = is_singular(tau)) {
        res.singular = w;
        return res;
    }
    std::vector<Coord> scaled(tau.coords());
    Walk walk = walk_to_alcove(std::move(scaled), 1, false);
    res.x = walk.x;
    res.lambda = Weight(walk.point);
    res.sign = walk.x.fin().det();
    res.length = separation_count(tau.coords(), 1);
    return res;
}

Weight EllContext::linkage_class(const Weight& tau) const {
    Walk walk = walk_to_alcove(std::vector<Coord>(tau.coords()), 1, true);
    return Weight(walk.point);
}

Coord EllContext::length(const ExtAffineElement& x) const {
    // Exact interior point p = (ell/h - 1) rho of C_fund, scaled by h:
    // h * (x . p) = h*ell*gamma + ell * w(rho) - h * rho.
    const std::size_t n = static_cast<std::size_t>(rs_->rank());
    const Coord h = rs_->coxeter_number();
    const Weight wrho = x.fin().apply(rs_->rho());
    std::vector<Coord> scaled(n);
    for (std::size_t j = 0; j < n; ++j)
        scaled[j] = h * ell_ * x.gamma()[j] + ell_ * wrho[j] - h * rs_->rho()[j];
    return separation_count(scaled, h);
}

int EllContext::sign(const ExtAffineElement& x) const {
    if (!in_waff(x)) throw std::domain_error("sign: element is not in W_aff");
    return x.fin().det();
}

void EllContext::build_omega() {
    const std::size_t n = static_cast<std::size_t>(rs_->rank());
    const Coord h = rs_->coxeter_number();
    std::set<std::vector<Coord>> seen;

    auto add_from = [&](const Weight& gamma) {
        auto label = rs_->coset_label(gamma);
        if (!seen.insert(label).second) return;
        ExtAffineElement t{gamma, FiniteWeylElement::identity(n)};
        // Interior sample point scaled by h, moved by t_gamma.
        std::vector<Coord> scaled(n);
        for (std::size_t j = 0; j < n; ++j)
            scaled[j] = (ell_ - h) * rs_->rho()[j] + h * ell_ * gamma[j];
        Walk walk = walk_to_alcove(std::move(scaled), h, false);
        ExtAffineElement omega = walk.x.inverse().compose(t);
        if (length(omega) != 0) throw std::logic_error("omega representative has nonzero length");
        omega_.push_back({omega, label, omega_.size()});
    };

    add_from(Weight(n)); // identity class
    for (std::size_t i = 0; i < n && omega_.size() < static_cast<std::size_t>(rs_->fundamental_group_order()); ++i)
        add_from(rs_->fundamental_weight(i));
    if (omega_.size() != static_cast<std::size_t>(rs_->fundamental_group_order()))
        throw std::logic_error("fundamental weights did not cover X/ZPhi");
}

const OmegaElement& EllContext::omega_of(const ExtAffineElement& x) const {
    const auto label = rs_->coset_label(x.gamma());
    for (const auto& o : omega_)
        if (o.class_label == label) return o;
    throw std::logic_error("coset label without omega representative");
}

const OmegaElement& EllContext::omega_mul(const OmegaElement& a, const OmegaElement& b) const {
    return omega_of(a.elem.compose(b.elem));
}

const OmegaElement& EllContext::omega_inverse(const OmegaElement& a) const {
    return omega_of(a.elem.inverse());
}

std::optional<OmegaElement> EllContext::principal_omega(const Weight& lambda) const {
    for (const auto& o : omega_)
        if (dot_act(o.elem, Weight(lambda.rank())) == lambda) return o;
    return std::nullopt;
}

ExtAffineElement EllContext::element_from_word(const std::vector<int>& letters) const {
    ExtAffineElement x = ExtAffineElement::identity(static_cast<std::size_t>(rs_->rank()));
    for (int s : letters) {
        if (s < 0 || static_cast<std::size_t>(s) >= gens_.size())
            throw std::invalid_argument("generator index s" + std::to_string(s) + " out of range");
        x = x.compose(gens_[static_cast<std::size_t>(s)]);
    }
    return x;
}

std::string EllContext::word_of(ExtAffineElement x) const {
    if (!in_waff(x)) throw std::domain_error("word_of: element is not in W_aff");
    if (x.is_identity()) return "e";
    std::string word;
    Coord len = length(x);
    for (Coord guard = 0; len > 0; ++guard) {
        if (guard > 100000) throw std::logic_error("word_of failed to terminate");
        bool found = false;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            ExtAffineElement y = gens_[i].compose(x);
            const Coord ly = length(y);
            if (ly < len) {
                word += "s" + std::to_string(i);
                x = y;
                len = ly;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no descent found");
    }
    return word;
}

bool EllContext::dominant_alcove(const ExtAffineElement& x) const {
    // Dominance of x . C_fund, checked at the interior sample point.
    const std::size_t n = static_cast<std::size_t>(rs_->rank());
    const Coord h = rs_->coxeter_number();
    const Weight wrho = x.fin().apply(rs_->rho());
    for (std::size_t i = 0; i < n; ++i) {
        // h * (x.p + rho, alpha_i^vee) with p the interior point
        const Coord v = h * ell_ * x.gamma()[i] + ell_ * wrho[i];
        if (v <= 0) return false;
    }
    return true;
}

std::vector<std::pair<ExtAffineElement, Coord>> EllContext::enumerate_ball(Coord max_len) const {
    std::vector<std::pair<ExtAffineElement, Coord>> out;
    std::set<ExtAffineElement> seen;
    std::vector<ExtAffineElement> level{ExtAffineElement::identity(static_cast<std::size_t>(rs_->rank()))};
    seen.insert(level[0]);
    out.emplace_back(level[0], 0);
    for (Coord d = 1; d <= max_len; ++d) {
        std::vector<ExtAffineElement> next;
        for (const auto& x : level)
            for (const auto& g : gens_) {
                ExtAffineElement y = x.compose(g);
                if (seen.insert(y).second) {
                    next.push_back(y);
                    out.emplace_back(y, d);
                }
            }
        level = std::move(next);
    }
    return out;
}

std::vector<ExtAffineElement> EllContext::enumerate_dominant(Coord max_len, bool extended) const {
    std::vector<ExtAffineElement> out;
    for (const auto& [x, len] : enumerate_ball(max_len)) {
        if (!extended) {
            if (dominant_alcove(x)) out.push_back(x);
        } else {
            for (const auto& o : omega_) {
                ExtAffineElement y = x.compose(o.elem);
                if (dominant_alcove(y)) out.push_back(y);
            }
        }
    }
    return out;
}

EllContext::XLambda EllContext::weight_to_xlambda(const Weight& tau) const {
    if (!tau.is_dominant()) throw std::domain_error("weight_to_xlambda: weight is not dominant");
    ReductionResult red = reduce(tau);
    if (red.is_singular()) throw std::domain_error("weight_to_xlambda: weight is ell-singular");
    return {red.x, red.lambda};
}

} // namespace alcove
