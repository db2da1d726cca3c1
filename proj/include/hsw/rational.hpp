#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hsw/errors.hpp"

namespace hsw {

using Int = mpz_class;

// mpz_class has no long long constructor on this ABI; convert explicitly.
Int make_int(long long v);

// Exact fraction, always kept in lowest terms with positive denominator.
// The only scalar used in the geometry; no floating point anywhere in the
// computational path.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(make_si(n)) {}
    Rational(int n) : Rational(static_cast<long long>(n)) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);
    Rational(long long num, long long den);

    // Strict parser for the canonical form "p/q" or "p" (q > 0, lowest terms
    // not required on input).  Throws std::invalid_argument on malformed text.
    static Rational parse(const std::string& s);

    Int num() const { return Int(v_.get_num()); }
    Int den() const { return Int(v_.get_den()); }

    int sign() const { return mpq_sgn(v_.get_mpq_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_half_integer() const;   // 2*x integral

    Int floor() const;
    Int ceil() const;

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational squared() const { return *this * *this; }
    Rational inverse() const;

    // Canonical "p/q" (or "p" when q = 1); the one serialization used in
    // JSON output and golden tests.
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

    static int cmp(const Rational& a, const Rational& b) {
        return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    }

private:
    static mpq_class make_si(long long n);
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// binom(n, k) with the convention binom(n, k) = 0 for k < 0 or k > n.
Int binom(const Int& n, long long k);

// Floor of sqrt(n); n must be >= 0.
Int isqrt(const Int& n);

// ---- exact comparisons against square roots -------------------------------
//
// Wall radii are stored as radius^2 only (the radius itself is generically
// irrational); every comparison involving a radius goes through these
// sign-aware squaring helpers.

// sign(a - sqrt(p)); requires p >= 0.
int cmp_to_radical(const Rational& a, const Rational& p);

// sign(u + v*sqrt(p)); requires p >= 0.
int sign_linear_radical(const Rational& u, const Rational& v, const Rational& p);

// sign((a + e1*sqrt(p)) - (b + e2*sqrt(q))), e1, e2 in {-1, +1}; p, q >= 0.
int cmp_radical_sum(const Rational& a, int e1, const Rational& p,
                    const Rational& b, int e2, const Rational& q);

// floor(a + sqrt(p)) and floor(a - sqrt(p)) as exact integers; p >= 0.
Int floor_plus_sqrt(const Rational& a, const Rational& p);
Int floor_minus_sqrt(const Rational& a, const Rational& p);

// Fixed-precision decimal rendering (round half away from zero), used only
// for SVG geometry attributes; never fed back into computation.
std::string decimal_string(const Rational& r, int significant_digits);
// Decimal rendering of sqrt(p), p >= 0, same contract as decimal_string.
std::string decimal_sqrt_string(const Rational& p, int significant_digits);

// Deterministic rational approximation of sqrt(p) from below, within
// 10^-digits; rendering-only helper.
Rational sqrt_lower_approx(const Rational& p, int digits);

} // namespace hsw
