#ifndef PDP_LINALG_HPP
#define PDP_LINALG_HPP

#include "pdp/rational.hpp"

#include <optional>
#include <vector>

namespace pdp {

using Vec = std::vector<Rat>;
using Mat = std::vector<std::vector<Rat>>;
using IntVec = std::vector<Int>;
using IntMat = std::vector<std::vector<Int>>;

std::size_t rank_of(Mat a);

/// One solution of A x = b together with a basis of the nullspace of A.
/// Empty optional when the system is inconsistent.
struct AffineSolution {
    Vec particular;
    std::vector<Vec> nullspace;
};
std::optional<AffineSolution> solve_affine(const Mat& a, const Vec& b);

/// Inverse of a square nonsingular matrix.
Mat invert(Mat a);

Rat dot(const Vec& a, const Vec& b);
Int dot(const IntVec& a, const IntVec& b);

/// Scale a rational vector by the unique positive rational turning it into an
/// integer vector with gcd 1.
IntVec scale_to_integers(const Vec& v);
/// Divide by the gcd of the entries (no-op on the zero vector).
void reduce_by_gcd(IntVec& v);

}  // namespace pdp

#endif
