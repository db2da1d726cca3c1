#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "hsw/rational.hpp"

namespace hsw {

// Chern character (ch0, ch1*L, ch2*L^2) with integer rank and degree and
// half-integral ch2.  c2 integrality (ch1^2/2 - ch2 integral) holds for
// characters of actual sheaves but is deliberately not enforced here: the
// wall search enumerates near-miss characters and excludes them precisely
// because c2 fails to be integral.
struct ChernCharacter {
    long long ch0 = 0;
    long long ch1 = 0;
    Rational ch2;

    ChernCharacter() = default;
    ChernCharacter(long long r, long long c, Rational d);

    bool c2_integral() const;   // ch1^2/2 - ch2 in Z

    friend bool operator==(const ChernCharacter& a, const ChernCharacter& b) {
        return a.ch0 == b.ch0 && a.ch1 == b.ch1 && a.ch2 == b.ch2;
    }

    ChernCharacter& operator+=(const ChernCharacter& o);
    ChernCharacter& operator-=(const ChernCharacter& o);
    friend ChernCharacter operator+(ChernCharacter a, const ChernCharacter& b) { return a += b; }
    friend ChernCharacter operator-(ChernCharacter a, const ChernCharacter& b) { return a -= b; }
    friend ChernCharacter operator*(long long m, ChernCharacter c);

    std::string to_string() const;  // "(r,c,d)"
};

// ch(O(m)) = (1, m, m^2/2)
ChernCharacter line_bundle_character(long long m);
// ch(I_Z) = (1, 0, -n) for a length-n scheme
ChernCharacter ideal_sheaf_character(long long n);
// ch(I_W(-k)) = (1, -k, k^2/2 - l) for a length-l scheme W
ChernCharacter twisted_ideal_character(long long k, long long l);

// Point s + it of the stability half-plane, t > 0.
struct StabilityPoint {
    Rational s;
    Rational t;
    StabilityPoint(Rational s_, Rational t_);
};

// Rational triple (ch0, ch1, ch2) after a rational twist; half-integrality
// is not preserved by e^{-sL} for non-integer s.
struct RatTriple {
    Rational r, c, d;
    friend bool operator==(const RatTriple& a, const RatTriple& b) {
        return a.r == b.r && a.c == b.c && a.d == b.d;
    }
};

// ch(E(-s)) = ch(E) . e^{-sL}:
//   (ch0, ch1 - s ch0, ch2 - s ch1 + (s^2/2) ch0)
RatTriple twist(const ChernCharacter& ch, const Rational& s);
RatTriple twist(const RatTriple& ch, const Rational& s);

// Central charge data at (s,t): r_t = t * ch1(E(-s)),
// d_t = -(t^2/2) ch0(E(-s)) + ch2(E(-s)).  Slope is d_t / r_t with
// r_t = 0 read as slope +infinity; slopes are compared by exact
// cross-multiplication, never formed as quotients.
struct ChargePair {
    Rational d_t;
    Rational r_t;
    bool slope_infinite() const { return r_t.is_zero(); }
};

ChargePair central_charge(const ChernCharacter& ch, const StabilityPoint& p);

bool slope_equal(const ChargePair& a, const ChargePair& b);
bool slope_less(const ChargePair& a, const ChargePair& b);

// Locus where two characters have equal slope: a vertical line or a
// semicircle centered on the real axis.  Radii are stored squared; a
// nonpositive radius^2 yields Degenerate (empty wall), a normal value used
// by the enumeration as a pruning signal.
struct VerticalLine { Rational s0; };
struct Semicircle { Rational center; Rational radius_sq; };
struct Degenerate {};
using WallGeometry = std::variant<VerticalLine, Semicircle, Degenerate>;

// Throws ProportionalInput when one triple is a rational multiple of the
// other (no wall is defined).
WallGeometry potential_wall(const ChernCharacter& a, const ChernCharacter& b);

// Wall center x = (ch2(F) + ch0(F) n) / ch1(F) for a destabilizer F of the
// ideal-sheaf character (1,0,-n); agrees with potential_wall(f, (1,0,-n))
// whenever that wall is a semicircle.  Throws ZeroDegree when ch1(F) = 0.
Rational wall_center_for_ideal(long long n, const ChernCharacter& f);

} // namespace hsw
