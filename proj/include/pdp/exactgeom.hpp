#ifndef PDP_EXACTGEOM_HPP
#define PDP_EXACTGEOM_HPP

#include "pdp/linalg.hpp"
#include "pdp/rational.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace pdp {

/// coeffs . x <= bound
struct AffineFunctional {
    Vec coeffs;
    Rat bound;

    Rat evaluate(const Vec& point) const { return dot(coeffs, point); }
    bool satisfied_by(const Vec& point) const { return evaluate(point) <= bound; }
};

/// coeffs . x = rhs
struct LinearEquality {
    Vec coeffs;
    Rat rhs;
};

struct HRep {
    std::size_t dim = 0;
    std::vector<AffineFunctional> inequalities;
    std::vector<LinearEquality> equalities;
};

struct VRep {
    std::size_t dim = 0;
    std::vector<Vec> points;
};

struct InsideCertificate {
    Vec weights;  // convex weights over the V-representation, in order
};
struct OutsideCertificate {
    AffineFunctional separator;  // separator.coeffs . point > bound, <= bound on every vertex
};
using MembershipCertificate = std::variant<InsideCertificate, OutsideCertificate>;

inline bool is_inside(const MembershipCertificate& c) {
    return std::holds_alternative<InsideCertificate>(c);
}

struct EnumerationBudget {
    /// Cap on the ray list maintained by the double description sweep.
    std::size_t max_rays = 2'000'000;
    int threads = 0;  // 0: hardware concurrency
};

/// Exact convex-hull membership via phase-1 simplex (Bland's rule).  The
/// returned certificate is re-verified against every vertex before return.
MembershipCertificate lp_membership(const Vec& point, const VRep& vrep);

/// Dimension of the affine hull of the points.
std::size_t affine_rank(const VRep& vrep);

/// All vertices of the bounded polyhedron {x : inequalities, equalities}.
/// Throws ValidationError when the polyhedron is empty or unbounded and
/// BudgetExceeded when the sweep exceeds the budget.
VRep vertices_from_hrep(const HRep& hrep, const EnumerationBudget& budget = {});

/// Facet-defining inequalities of conv(points) within its affine hull, plus
/// the hull equalities.  Inequalities are canonicalized: coefficients reduced
/// against the hull equalities, scaled to integers with gcd 1, and sorted.
HRep facets_from_vrep(const VRep& vrep, const EnumerationBudget& budget = {});

/// Extreme rays of the pointed cone {y : A y >= 0}, gcd-reduced and sorted.
IntMat extreme_rays(const IntMat& rows, const EnumerationBudget& budget = {});

}  // namespace pdp

#endif
