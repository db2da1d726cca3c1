#pragma once

#include <array>
#include <vector>

#include "hsw/bridgeland.hpp"
#include "hsw/walls.hpp"

namespace hsw {

// Dimension vector of a complex built on the exceptional triple
// O(k-2)[2], O(k-1)[1], O(k).
struct DimensionVector {
    long long n0 = 0, n1 = 0, n2 = 0;
    DimensionVector() = default;
    DimensionVector(long long a, long long b, long long c);
    friend bool operator==(const DimensionVector& x, const DimensionVector& y) {
        return x.n0 == y.n0 && x.n1 == y.n1 && x.n2 == y.n2;
    }
    std::string to_string() const;
};

using Mat3 = std::array<std::array<Rational, 3>, 3>;

// Dimensions -> Chern classes, rows
//   (1, -1, 1), (k-2, -(k-1), k), ((k-2)^2/2, -(k-1)^2/2, k^2/2)
Mat3 dims_to_chern_matrix(long long k);
// Chern classes -> dimensions, rows
//   (k(k-1)/2, -(2k-1)/2, 1), (k(k-2), -(2k-2), 2), ((k-1)(k-2)/2, -(2k-3)/2, 1)
Mat3 chern_to_dims_matrix(long long k);

RatTriple mat_apply(const Mat3& m, const RatTriple& v);
Mat3 mat_mul(const Mat3& a, const Mat3& b);

RatTriple dims_to_chern(long long k, const DimensionVector& v);
// Result need not be integral or nonnegative; the caller decides membership.
RatTriple chern_to_dims(long long k, const RatTriple& ch);

// Dimension invariants of I_Z[1] (character (-1,0,n)) in the heart built on
// O(-d-2)[2], O(-d-1)[1], O(-d):
//   (n - d(d+1)/2, 2n - d(d+2), n - (d+1)(d+2)/2)
// Throws NotInCategory when n < (d+1)(d+2)/2.
DimensionVector ideal_dims(long long n, long long d);

// (s - (k-1))^2 + t^2 < 1, evaluated exactly.
bool quiver_region_contains(long long k, const StabilityPoint& p);

// All k whose open unit disc centered at (k-1, 0) meets the open semicircle
// with the given center < 0 and radius^2; radius_sq <= 0 gives the empty
// list.  The criterion | dist - radius | < 1 is decided by squaring.
std::vector<long long> regions_meeting_wall(const Rational& center,
                                            const Rational& radius_sq);
std::vector<long long> regions_meeting_wall(const Wall& w);

// Proper nonzero sub-dimension-vectors 0 <= d <= v, d not in {0, v}; each
// cuts the hyperplane d.a = 0 in the weight plane { a : v.a = 0 }.  The
// count is prod(v_i + 1) - 2.
std::vector<DimensionVector> king_hyperplanes(const DimensionVector& v);

// Integer weight triple with v.a = 0: real parts of a King stability weight
// for dimension vector v.  The paired b-triple (imaginary parts) is kept as
// given, read-only.
struct KingWeights {
    std::array<Int, 3> a;
    std::array<Rational, 3> b;
};

// Projects the rational triple w onto { a : v.a = 0 }, clears denominators,
// divides by the gcd and fixes the sign so a0 <= 0 when nonzero (first
// nonzero entry positive when a0 = 0).  Throws PreconditionViolation when
// the projection vanishes.
KingWeights king_normalize(const DimensionVector& v,
                           const std::array<Rational, 3>& w,
                           const std::array<Rational, 3>& b = {});

} // namespace hsw
