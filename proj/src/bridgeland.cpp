#include "hsw/bridgeland.hpp"

namespace hsw {

ChernCharacter::ChernCharacter(long long r, long long c, Rational d)
    : ch0(r), ch1(c), ch2(std::move(d)) {
    if (!ch2.is_half_integer())
        throw PreconditionViolation("ch2 must be half-integral");
}

bool ChernCharacter::c2_integral() const {
    return (Rational(ch1 * ch1, 2) - ch2).is_integer();
}

ChernCharacter& ChernCharacter::operator+=(const ChernCharacter& o) {
    ch0 += o.ch0;
    ch1 += o.ch1;
    ch2 += o.ch2;
    return *this;
}

ChernCharacter& ChernCharacter::operator-=(const ChernCharacter& o) {
    ch0 -= o.ch0;
    ch1 -= o.ch1;
    ch2 -= o.ch2;
    return *this;
}

ChernCharacter operator*(long long m, ChernCharacter c) {
    c.ch0 *= m;
    c.ch1 *= m;
    c.ch2 *= Rational(m);
    return c;
}

std::string ChernCharacter::to_string() const {
    return "(" + std::to_string(ch0) + "," + std::to_string(ch1) + "," +
           ch2.to_string() + ")";
}

ChernCharacter line_bundle_character(long long m) {
    return {1, m, Rational(m * m, 2)};
}

ChernCharacter ideal_sheaf_character(long long n) {
    return {1, 0, Rational(-n)};
}

ChernCharacter twisted_ideal_character(long long k, long long l) {
    return {1, -k, Rational(k * k, 2) - Rational(l)};
}

StabilityPoint::StabilityPoint(Rational s_, Rational t_)
    : s(std::move(s_)), t(std::move(t_)) {
    if (t.sign() <= 0) throw PreconditionViolation("stability point needs t > 0");
}

RatTriple twist(const ChernCharacter& ch, const Rational& s) {
    return twist(RatTriple{Rational(ch.ch0), Rational(ch.ch1), ch.ch2}, s);
}

RatTriple twist(const RatTriple& ch, const Rational& s) {
    return {ch.r,
            ch.c - s * ch.r,
            ch.d - s * ch.c + s.squared() * Rational(1, 2) * ch.r};
}

ChargePair central_charge(const ChernCharacter& ch, const StabilityPoint& p) {
    RatTriple tw = twist(ch, p.s);
    return {-p.t.squared() * Rational(1, 2) * tw.r + tw.d, p.t * tw.c};
}

bool slope_equal(const ChargePair& a, const ChargePair& b) {
    if (a.slope_infinite() || b.slope_infinite())
        return a.slope_infinite() && b.slope_infinite();
    return a.d_t * b.r_t == b.d_t * a.r_t;
}

bool slope_less(const ChargePair& a, const ChargePair& b) {
    if (a.slope_infinite()) return false;
    if (b.slope_infinite()) return true;
    // d1/r1 < d2/r2  <=>  d1 r2 r1 r2 < d2 r1 r1 r2 (multiplying by (r1 r2)^2 > 0)
    return a.d_t * b.r_t * a.r_t * b.r_t < b.d_t * a.r_t * a.r_t * b.r_t;
}

WallGeometry potential_wall(const ChernCharacter& a, const ChernCharacter& b) {
    const Rational r{a.ch0}, c{a.ch1}, d = a.ch2;
    const Rational rp{b.ch0}, cp{b.ch1}, dp = b.ch2;
    const Rational rc = r * cp - rp * c;
    const Rational rd = r * dp - rp * d;
    const Rational cd = c * dp - cp * d;
    if (rc.is_zero() && rd.is_zero() && cd.is_zero())
        throw ProportionalInput("wall undefined for proportional characters");
    if (rc.is_zero()) {
        if (rd.is_zero()) return Degenerate{};  // equation 2*cd = 0 has no solution
        return VerticalLine{cd / rd};
    }
    const Rational center = rd / rc;
    const Rational radius_sq = center.squared() - Rational(2) * cd / rc;
    if (radius_sq.sign() <= 0) return Degenerate{};
    return Semicircle{center, radius_sq};
}

Rational wall_center_for_ideal(long long n, const ChernCharacter& f) {
    if (f.ch1 == 0) throw ZeroDegree("wall center undefined for degree-zero character");
    return (f.ch2 + Rational(f.ch0) * Rational(n)) / Rational(f.ch1);
}

} // namespace hsw
