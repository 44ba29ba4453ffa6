#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alcove/affine.hpp"
#include "alcove/regparts.hpp"
#include "alcove/weight.hpp"

namespace alcove {

/// Conjunction of the constraints a single degree of a minimal tilting
/// complex is known to satisfy.  Interior multiplicities are not pinned by
/// the structural results, so a constraint object is the honest datum.
struct DegreeConstraint {
    bool zero = false;
    bool negligible = false;              // every summand negligible
    std::optional<Weight> exactly;        // the term is T(w), nothing else
    std::optional<Weight> contains;       // [term : T(w)] = 1, rest unconstrained
    std::optional<std::vector<Weight>> support; // admissible highest weights

    std::string str() const;
};

class ComplexProfile {
public:
    ComplexProfile() = default;
    ComplexProfile(std::map<int, DegreeConstraint> degrees, bool symmetric)
        : degrees_(std::move(degrees)), symmetric_(symmetric) {}

    bool symmetric() const { return symmetric_; }
    /// Constraint at degree i; Zero outside the stored support, mirrored when
    /// the profile is symmetric.
    DegreeConstraint at(int i) const;
    const std::map<int, DegreeConstraint>& stored() const { return degrees_; }
    int max_degree() const { return degrees_.empty() ? 0 : degrees_.rbegin()->first; }

private:
    std::map<int, DegreeConstraint> degrees_;
    bool symmetric_ = false;
};

/// Structural profile of the minimal tilting complex of the Weyl module
/// Delta(x . lambda): supported in degrees 0..len(x), T(x . lambda) at 0,
/// the alcove tilting at the top, negligible elsewhere, support bounded by
/// the dominant elements below x.
ComplexProfile weyl_profile(const EllContext& ctx, const ExtAffineElement& x, const Weight& lambda);

/// Profile of the minimal tilting complex of L(x . lambda): symmetric in the
/// degree, alcove tilting at the two endpoints, multiplicity one of
/// T(x . lambda) in the middle, negligible next to the endpoints.
ComplexProfile simple_profile(const EllContext& ctx, const ExtAffineElement& x, const Weight& lambda);

/// A concrete complex description: degree -> summands (dominant weight,
/// multiplicity).  Used to validate externally supplied data.
using CandidateComplex = std::map<int, std::vector<std::pair<Weight, std::int64_t>>>;

/// nullopt when the candidate satisfies the profile, otherwise the first
/// violated constraint in words.
std::optional<std::string> check_profile(const EllContext& ctx, const CandidateComplex& candidate,
                                         const ComplexProfile& profile);

/// Good filtration dimension of a regular Simple or Weyl label: the length
/// of its alcove element.
Coord gfd(const EllContext& ctx, const ObjLabel& label);

struct GfdResult {
    Coord gfd = 0;
    bool strongly_regular = true;
};

/// Tensor products of regular Simple/Weyl labels are strongly regular with
/// additive good filtration dimension.
GfdResult gfd_tensor(const EllContext& ctx, const std::vector<ObjLabel>& labels);

bool is_regular_label(const EllContext& ctx, const ObjLabel& label);

enum class StrongRegularity { StronglyRegular, NotStronglyRegular, Undetermined };

/// Simple/Weyl and tilting labels are decidable; other kinds carry too
/// little data and report Undetermined.
StrongRegularity strong_regularity(const EllContext& ctx, const ObjLabel& label);

} // namespace alcove
