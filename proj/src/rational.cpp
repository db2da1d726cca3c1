#include "hsw/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace hsw {

Int make_int(long long v) {
    if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max())
        return Int(static_cast<long>(v));
    return Int(std::to_string(v));
}

mpq_class Rational::make_si(long long n) {
    return mpq_class(make_int(n));
}

Rational::Rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(long long num, long long den)
    : Rational(Int(make_si(num).get_num()), Int(make_si(den).get_num())) {}

Rational Rational::parse(const std::string& s) {
    auto bad = [&] { return std::invalid_argument("not a rational: '" + s + "'"); };
    std::size_t slash = s.find('/');
    std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
    std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto valid_int = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!valid_int(ns, true) || !valid_int(ds, false)) throw bad();
    Int num(ns), den(ds);
    if (sgn(den) == 0) throw bad();
    return Rational(num, den);
}

bool Rational::is_half_integer() const {
    return Int(v_.get_den()) <= 2;
}

Int Rational::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Int Rational::ceil() const {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
    return Rational(den(), num());
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Int binom(const Int& n, long long k) {
    if (k < 0 || make_int(k) > n) return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Int isqrt(const Int& n) {
    if (sgn(n) < 0) throw std::invalid_argument("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

int cmp_to_radical(const Rational& a, const Rational& p) {
    if (p.sign() < 0) throw std::invalid_argument("cmp_to_radical: negative radicand");
    if (p.is_zero()) return a.sign();
    if (a.sign() <= 0) return -1;
    const int c = Rational::cmp(a.squared(), p);
    return (c > 0) - (c < 0);
}

int sign_linear_radical(const Rational& u, const Rational& v, const Rational& p) {
    if (p.sign() < 0) throw std::invalid_argument("sign_linear_radical: negative radicand");
    if (v.is_zero() || p.is_zero()) return u.sign();
    if (v.sign() < 0) return -sign_linear_radical(-u, -v, p);
    // u + v*sqrt(p) vs 0  <=>  sqrt(p) vs -u/v
    return -cmp_to_radical(-u / v, p);
}

int cmp_radical_sum(const Rational& a, int e1, const Rational& p,
                    const Rational& b, int e2, const Rational& q) {
    const Rational c = a - b;
    // sign((c + e1*sqrt(p)) - e2*sqrt(q))
    const int sl = sign_linear_radical(c, Rational(e1), p);
    const int sr = q.is_zero() ? 0 : e2;
    if (sl != sr) return sl > sr ? 1 : -1;
    if (sl == 0) return 0;
    // Same nonzero sign on both sides; compare squares, flipping for negatives.
    // (c + e1*sqrt(p))^2 - q = (c^2 + p - q) + 2*c*e1*sqrt(p)
    const int s2 = sign_linear_radical(c.squared() + p - q,
                                       Rational(2 * e1) * c, p);
    return sl > 0 ? s2 : -s2;
}

namespace {

Int floor_with_sign(const Rational& a, int e, const Rational& p) {
    if (p.sign() < 0) throw std::invalid_argument("floor of complex value");
    // m <= a + e*sqrt(p)  <=>  (e = +1)  cmp_to_radical(m - a, p) <= 0
    //                     <=>  (e = -1)  cmp_to_radical(a - m, p) >= 0
    auto le = [&](const Int& m) {
        Rational mr{m};
        if (e > 0) return cmp_to_radical(mr - a, p) <= 0;
        return cmp_to_radical(a - mr, p) >= 0;
    };
    const Int root_hi = isqrt(p.ceil()) + 1;
    Int lo = a.floor() - root_hi - 1;   // definitely <= value
    Int hi = a.ceil() + root_hi + 1;    // definitely > value
    // Largest m in [lo, hi) with le(m); le is monotone.
    while (hi - lo > 1) {
        Int sum = lo + hi;
        Int mid;
        mpz_fdiv_q_ui(mid.get_mpz_t(), sum.get_mpz_t(), 2);
        if (le(mid)) lo = mid; else hi = mid;
    }
    return lo;
}

} // namespace

Int floor_plus_sqrt(const Rational& a, const Rational& p) { return floor_with_sign(a, +1, p); }
Int floor_minus_sqrt(const Rational& a, const Rational& p) { return floor_with_sign(a, -1, p); }

namespace {

Int pow10(int k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return r;
}

// Round num/den (den > 0) half away from zero to the nearest integer.
Int round_quotient(const Int& num, const Int& den) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) q += 1;
    return q;
}

std::string format_scaled(const Int& scaled, int frac_digits, bool negative) {
    std::string digits = scaled.get_str();
    std::string out = negative ? "-" : "";
    if (static_cast<int>(digits.size()) <= frac_digits) {
        out += "0.";
        out += std::string(frac_digits - digits.size(), '0');
        out += digits;
    } else if (frac_digits == 0) {
        out += digits;
    } else {
        out += digits.substr(0, digits.size() - frac_digits);
        out += ".";
        out += digits.substr(digits.size() - frac_digits);
    }
    return out;
}

} // namespace

std::string decimal_string(const Rational& r, int sig) {
    if (r.is_zero()) return "0";
    const bool neg = r.sign() < 0;
    const Rational x = r.abs();
    // Number of integer digits (0 when x < 1).
    int int_digits = 0;
    Int ip = x.floor();
    if (sgn(ip) > 0) int_digits = static_cast<int>(ip.get_str().size());
    int frac = sig - int_digits;
    if (frac < 0) frac = 0;
    if (int_digits == 0) {
        // Leading zeros after the point do not count as significant digits.
        Rational y = x;
        while (y < Rational(1, 10)) {
            y *= 10;
            ++frac;
            if (frac > 10000) break;    // x == 0 handled above; safety stop
        }
    }
    Int scaled = round_quotient(x.num() * pow10(frac), x.den());
    return format_scaled(scaled, frac, neg);
}

std::string decimal_sqrt_string(const Rational& p, int sig) {
    if (p.sign() < 0) throw std::invalid_argument("decimal_sqrt_string: negative");
    if (p.is_zero()) return "0";
    // sqrt(p/q) = sqrt(p*q)/q; approximate with guard digits, then re-render.
    const int guard = 6;
    Int scaled = isqrt(p.num() * p.den() * pow10(2 * (sig + guard)));
    return decimal_string(Rational(scaled, p.den() * pow10(sig + guard)), sig);
}

Rational sqrt_lower_approx(const Rational& p, int digits) {
    if (p.sign() < 0) throw std::invalid_argument("sqrt_lower_approx: negative");
    if (p.is_zero()) return Rational(0);
    const Int scale = pow10(digits);
    const Int s = isqrt(p.num() * p.den() * scale * scale);
    return Rational(s, p.den() * scale);
}

} // namespace hsw
