#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsw/rational.hpp"

namespace hsw {

// Divisor class a*H + b*B on the Hilbert scheme of n points in the plane,
// stored exactly.  ambient_n = 0 means the class is not pinned to a
// particular n (H, B and user-built combinations); the named constructors
// below tag their ambient scheme so mismatched intersections are caught.
struct DivisorClass {
    Rational h_coeff;
    Rational b_coeff;
    long long ambient_n = 0;

    bool is_zero() const { return h_coeff.is_zero() && b_coeff.is_zero(); }

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.h_coeff == b.h_coeff && a.b_coeff == b.b_coeff;
    }

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Rational& c);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& c, DivisorClass d) { return d *= c; }
};

inline DivisorClass divisor_H() { return {1, 0, 0}; }
inline DivisorClass divisor_B() { return {0, 1, 0}; }

// "aH - p/q B" (coefficient 1 omitted); the canonical ray string used in
// text output and JSON.
std::string divisor_to_string(const DivisorClass& d);

enum class CurveKind {
    DiagonalFiber,  // C(n): fiber of the Hilbert-Chow morphism over the diagonal
    LinePencil,     // C_r(n): r-1 fixed points on a line, one moving along it
    ConicPencil,    // A_{2,k}(n): k-1 fixed points on a conic, one moving along it
    MovingE,        // pencil on a smooth degree-r curve, n = r(r+1)/2 + s
    MovingF,        // pencil on a smooth degree-(r+2) curve, same n
};

// Curve classes are symbolic (kind + parameters); the intersection pairing
// table below is the single source of truth for their numbers.
struct CurveClass {
    CurveKind kind;
    long long n;        // ambient Hilbert scheme
    long long r = 0;    // LinePencil / MovingE / MovingF parameter
    long long s = 0;    // MovingE / MovingF parameter
    long long k = 0;    // ConicPencil parameter

    static CurveClass diagonal(long long n);
    static CurveClass line_pencil(long long n, long long r);   // 1 <= r <= n
    static CurveClass conic_pencil(long long n, long long k);  // 1 <= k <= n
    static CurveClass moving_e(long long r, long long s);      // 0 <= s <= r
    static CurveClass moving_f(long long r, long long s);

    std::string to_string() const;
};

// Pairing table, extended bilinearly:
//   H.C(n) = 0,          B.C(n) = -2
//   H.C_r(n) = 1,        B.C_r(n) = 2(r-1)
//   H.A_{2,k}(n) = 2,    B.A_{2,k}(n) = 2(k-1)
//   H.R_E = r,           B.R_E = 2(r^2 - r + s)
//   H.R_F = r + 2,       B.R_F = 2(r^2 + r + s - 1)
Rational intersect(const DivisorClass& d, const CurveClass& c);

// D_k(n) = kH - B/2; defined when k(k+3)/2 >= n.
DivisorClass divisor_Dk(long long n, long long k);

// E_k(n) = C(n-1, k(k+3)/2) k H - (1/2) C(n-2, k(k+3)/2 - 1) B, for
// n > k(k+3)/2, with the convention C(a, b) = 0 when a < b.
DivisorClass divisor_Ek(long long n, long long k);

// D_E(n) = aH - (r/2)B for a rank-r interpolation bundle with c1 = aL.
DivisorClass divisor_interpolation(long long a, long long r);

// Positive rescaling so the H-coefficient is 1 (or, on the H = 0 ray, so the
// B-coefficient is 1).  Throws ZeroClass on 0.
DivisorClass ray_normalize(const DivisorClass& d);

} // namespace hsw
