#include "hsw/quiver.hpp"

namespace hsw {

DimensionVector::DimensionVector(long long a, long long b, long long c)
    : n0(a), n1(b), n2(c) {
    if (n0 < 0 || n1 < 0 || n2 < 0)
        throw PreconditionViolation("dimension vector must be componentwise >= 0");
}

std::string DimensionVector::to_string() const {
    return "(" + std::to_string(n0) + "," + std::to_string(n1) + "," +
           std::to_string(n2) + ")";
}

Mat3 dims_to_chern_matrix(long long k) {
    return {{{Rational(1), Rational(-1), Rational(1)},
             {Rational(k - 2), Rational(-(k - 1)), Rational(k)},
             {Rational((k - 2) * (k - 2), 2), Rational(-(k - 1) * (k - 1), 2),
              Rational(k * k, 2)}}};
}

Mat3 chern_to_dims_matrix(long long k) {
    return {{{Rational(k * (k - 1), 2), Rational(-(2 * k - 1), 2), Rational(1)},
             {Rational(k * (k - 2)), Rational(-(2 * k - 2)), Rational(2)},
             {Rational((k - 1) * (k - 2), 2), Rational(-(2 * k - 3), 2),
              Rational(1)}}};
}

RatTriple mat_apply(const Mat3& m, const RatTriple& v) {
    auto row = [&](int i) {
        return m[i][0] * v.r + m[i][1] * v.c + m[i][2] * v.d;
    };
    return {row(0), row(1), row(2)};
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    return out;
}

RatTriple dims_to_chern(long long k, const DimensionVector& v) {
    return mat_apply(dims_to_chern_matrix(k),
                 {Rational(v.n0), Rational(v.n1), Rational(v.n2)});
}

RatTriple chern_to_dims(long long k, const RatTriple& ch) {
    return mat_apply(chern_to_dims_matrix(k), ch);
}

DimensionVector ideal_dims(long long n, long long d) {
    if (n < 1 || d < 0) throw PreconditionViolation("ideal_dims needs n >= 1, d >= 0");
    if (n < (d + 1) * (d + 2) / 2)
        throw NotInCategory("I_Z[1] needs n >= (d+1)(d+2)/2");
    return {n - d * (d + 1) / 2, 2 * n - d * (d + 2), n - (d + 1) * (d + 2) / 2};
}

bool quiver_region_contains(long long k, const StabilityPoint& p) {
    const Rational ds = p.s - Rational(k - 1);
    return ds.squared() + p.t.squared() < Rational(1);
}

std::vector<long long> regions_meeting_wall(const Rational& center,
                                            const Rational& radius_sq) {
    std::vector<long long> out;
    if (radius_sq.sign() <= 0) return out;
    if (center.sign() >= 0)
        throw PreconditionViolation("regions_meeting_wall expects center < 0");
    // The arc meets the open disc iff |dist - radius| < 1 where dist is the
    // distance between the centers.
    const Int lo = floor_minus_sqrt(center - Rational(1), radius_sq);
    const Int hi = floor_plus_sqrt(center + Rational(1), radius_sq) + 1;
    for (Int m = lo; m <= hi; ++m) {
        if (!m.fits_slong_p()) throw InternalInconsistency("region index overflow");
        const long long km1 = m.get_si();
        const Rational dist = (center - Rational(km1)).abs();
        if (cmp_to_radical(dist - Rational(1), radius_sq) < 0 &&
            cmp_to_radical(dist + Rational(1), radius_sq) > 0)
            out.push_back(km1 + 1);
    }
    return out;
}

std::vector<long long> regions_meeting_wall(const Wall& w) {
    return regions_meeting_wall(w.center, w.radius_sq);
}

std::vector<DimensionVector> king_hyperplanes(const DimensionVector& v) {
    if (v == DimensionVector{})
        throw PreconditionViolation("king_hyperplanes needs a nonzero vector");
    std::vector<DimensionVector> out;
    for (long long a = 0; a <= v.n0; ++a)
        for (long long b = 0; b <= v.n1; ++b)
            for (long long c = 0; c <= v.n2; ++c) {
                DimensionVector d{a, b, c};
                if (d == DimensionVector{} || d == v) continue;
                out.push_back(d);
            }
    return out;
}

KingWeights king_normalize(const DimensionVector& v,
                           const std::array<Rational, 3>& w,
                           const std::array<Rational, 3>& b) {
    const Rational vn0{v.n0}, vn1{v.n1}, vn2{v.n2};
    const Rational vv = vn0 * vn0 + vn1 * vn1 + vn2 * vn2;
    if (vv.is_zero())
        throw PreconditionViolation("king_normalize needs a nonzero vector");
    const Rational vw = vn0 * w[0] + vn1 * w[1] + vn2 * w[2];
    std::array<Rational, 3> proj = {w[0] - vn0 * vw / vv, w[1] - vn1 * vw / vv,
                                    w[2] - vn2 * vw / vv};
    if (proj[0].is_zero() && proj[1].is_zero() && proj[2].is_zero())
        throw PreconditionViolation("weight is parallel to the dimension vector");
    Int lcm = 1;
    for (const auto& p : proj) {
        Int l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), p.den().get_mpz_t());
        lcm = l;
    }
    std::array<Int, 3> a;
    for (int i = 0; i < 3; ++i) a[i] = (proj[i] * Rational(lcm)).num();
    Int g = 0;
    for (const auto& x : a) {
        Int t;
        mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        g = t;
    }
    for (auto& x : a) x /= g;
    int flip = 0;
    if (sgn(a[0]) != 0) flip = sgn(a[0]) > 0 ? -1 : 1;
    else if (sgn(a[1]) != 0) flip = sgn(a[1]) > 0 ? 1 : -1;
    else flip = sgn(a[2]) > 0 ? 1 : -1;
    if (flip < 0)
        for (auto& x : a) x = -x;
    return {a, b};
}

} // namespace hsw
