#include "hsw/picard.hpp"

#include <utility>

namespace hsw {

namespace {

long long merge_ambient(long long a, long long b) {
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
    throw MismatchedAmbient("divisor arithmetic across different Hilbert schemes");
}

} // namespace

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    ambient_n = merge_ambient(ambient_n, o.ambient_n);
    h_coeff += o.h_coeff;
    b_coeff += o.b_coeff;
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    ambient_n = merge_ambient(ambient_n, o.ambient_n);
    h_coeff -= o.h_coeff;
    b_coeff -= o.b_coeff;
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& c) {
    h_coeff *= c;
    b_coeff *= c;
    return *this;
}

std::string divisor_to_string(const DivisorClass& d) {
    if (d.is_zero()) return "0";
    std::string out;
    if (!d.h_coeff.is_zero()) {
        if (d.h_coeff == Rational(1)) out = "H";
        else if (d.h_coeff == Rational(-1)) out = "-H";
        else out = d.h_coeff.to_string() + "H";
    }
    if (!d.b_coeff.is_zero()) {
        Rational ab = d.b_coeff.abs();
        std::string mag = ab == Rational(1) ? "B" : ab.to_string() + " B";
        if (out.empty()) {
            out = (d.b_coeff.sign() < 0 ? "-" : "") + mag;
        } else {
            out += (d.b_coeff.sign() < 0 ? " - " : " + ") + mag;
        }
    }
    return out;
}

CurveClass CurveClass::diagonal(long long n) {
    if (n < 1) throw PreconditionViolation("C(n) needs n >= 1");
    return {CurveKind::DiagonalFiber, n};
}

CurveClass CurveClass::line_pencil(long long n, long long r) {
    if (n < 1 || r < 1 || r > n)
        throw PreconditionViolation("C_r(n) needs 1 <= r <= n");
    CurveClass c{CurveKind::LinePencil, n};
    c.r = r;
    return c;
}

CurveClass CurveClass::conic_pencil(long long n, long long k) {
    if (n < 1 || k < 1 || k > n)
        throw PreconditionViolation("A_{2,k}(n) needs 1 <= k <= n");
    CurveClass c{CurveKind::ConicPencil, n};
    c.k = k;
    return c;
}

CurveClass CurveClass::moving_e(long long r, long long s) {
    if (r < 1 || s < 0 || s > r)
        throw PreconditionViolation("moving curve needs 0 <= s <= r, r >= 1");
    CurveClass c{CurveKind::MovingE, r * (r + 1) / 2 + s};
    c.r = r;
    c.s = s;
    return c;
}

CurveClass CurveClass::moving_f(long long r, long long s) {
    if (r < 1 || s < 0 || s > r)
        throw PreconditionViolation("moving curve needs 0 <= s <= r, r >= 1");
    CurveClass c{CurveKind::MovingF, r * (r + 1) / 2 + s};
    c.r = r;
    c.s = s;
    return c;
}

std::string CurveClass::to_string() const {
    switch (kind) {
        case CurveKind::DiagonalFiber: return "C(" + std::to_string(n) + ")";
        case CurveKind::LinePencil:
            return "C_" + std::to_string(r) + "(" + std::to_string(n) + ")";
        case CurveKind::ConicPencil:
            return "A_{2," + std::to_string(k) + "}(" + std::to_string(n) + ")";
        case CurveKind::MovingE:
            return "R_E(" + std::to_string(r) + "," + std::to_string(s) + ")";
        case CurveKind::MovingF:
            return "R_F(" + std::to_string(r) + "," + std::to_string(s) + ")";
    }
    return "?";
}

Rational intersect(const DivisorClass& d, const CurveClass& c) {
    if (d.ambient_n != 0 && d.ambient_n != c.n)
        throw MismatchedAmbient("divisor and curve live on different Hilbert schemes");
    Rational h_dot, b_dot;
    switch (c.kind) {
        case CurveKind::DiagonalFiber:
            h_dot = 0; b_dot = -2; break;
        case CurveKind::LinePencil:
            h_dot = 1; b_dot = 2 * (c.r - 1); break;
        case CurveKind::ConicPencil:
            h_dot = 2; b_dot = 2 * (c.k - 1); break;
        case CurveKind::MovingE:
            h_dot = c.r; b_dot = 2 * (c.r * c.r - c.r + c.s); break;
        case CurveKind::MovingF:
            h_dot = c.r + 2; b_dot = 2 * (c.r * c.r + c.r + c.s - 1); break;
    }
    return d.h_coeff * h_dot + d.b_coeff * b_dot;
}

DivisorClass divisor_Dk(long long n, long long k) {
    if (n < 1 || k < 1 || k * (k + 3) / 2 < n)
        throw PreconditionViolation("D_k(n) needs k(k+3)/2 >= n");
    return {Rational(k), Rational(-1, 2), n};
}

DivisorClass divisor_Ek(long long n, long long k) {
    if (n < 1 || k < 1 || n <= k * (k + 3) / 2)
        throw PreconditionViolation("E_k(n) needs n > k(k+3)/2");
    const long long K = k * (k + 3) / 2;
    const Int h_count = binom(make_int(n - 1), K) * make_int(k);
    Rational h{h_count};
    Rational b = Rational(-1, 2) * Rational(binom(make_int(n - 2), K - 1));
    return {h, b, n};
}

DivisorClass divisor_interpolation(long long a, long long r) {
    if (a < 1 || r < 1)
        throw PreconditionViolation("interpolation divisor needs a >= 1, r >= 1");
    return {Rational(a), Rational(-r, 2), 0};
}

DivisorClass ray_normalize(const DivisorClass& d) {
    if (d.is_zero()) throw ZeroClass("cannot normalize the zero class");
    if (d.h_coeff.sign() > 0) {
        Rational inv = d.h_coeff.inverse();
        return {1, d.b_coeff * inv, d.ambient_n};
    }
    if (d.h_coeff.is_zero() && d.b_coeff.sign() > 0)
        return {0, 1, d.ambient_n};
    throw PreconditionViolation("ray not in the effective half-plane (H, B coefficients)");
}

} // namespace hsw
