#include <doctest.h>

#include <random>

#include "hsw/picard.hpp"

using namespace hsw;

namespace {

std::mt19937_64 rng(777123u);

Rational random_rational() {
    std::uniform_int_distribution<long long> num(-200, 200);
    std::uniform_int_distribution<long long> den(1, 40);
    return Rational(num(rng), den(rng));
}

CurveClass random_curve(long long n) {
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<long long> param(1, n);
    switch (kind(rng)) {
        case 0: return CurveClass::diagonal(n);
        case 1: return CurveClass::line_pencil(n, param(rng));
        default: return CurveClass::conic_pencil(n, param(rng));
    }
}

} // namespace

TEST_CASE("D_k(n) classes") {
    const DivisorClass d32 = divisor_Dk(3, 2);
    CHECK(d32 == DivisorClass{2, Rational(-1, 2)});
    CHECK(ray_normalize(d32) == DivisorClass{1, Rational(-1, 4)});
    CHECK(divisor_Dk(2, 1) == DivisorClass{1, Rational(-1, 2)});
    CHECK(ray_normalize(divisor_Dk(5, 4)) == DivisorClass{1, Rational(-1, 8)});
    CHECK_THROWS_AS(divisor_Dk(3, 1), PreconditionViolation);  // 1*4/2 = 2 < 3
}

TEST_CASE("E_k(n) classes") {
    CHECK(divisor_Ek(3, 1) == DivisorClass{1, Rational(-1, 2)});
    CHECK(divisor_Ek(4, 1) == DivisorClass{3, -1});
    CHECK(ray_normalize(divisor_Ek(4, 1)) == DivisorClass{1, Rational(-1, 3)});
    CHECK(divisor_Ek(6, 2) == DivisorClass{2, Rational(-1, 2)});
    CHECK(ray_normalize(divisor_Ek(6, 2)) == DivisorClass{1, Rational(-1, 4)});
    CHECK_THROWS_AS(divisor_Ek(2, 1), PreconditionViolation);  // needs n > 2
}

TEST_CASE("E_k ray closed form across n <= 50") {
    // ray of E_k(n) is H - (k+3)/(4(n-1)) B whenever E_k(n) is defined
    for (long long n = 3; n <= 50; ++n)
        for (long long k = 1; k * (k + 3) / 2 < n; ++k) {
            const DivisorClass ray = ray_normalize(divisor_Ek(n, k));
            CHECK(ray.b_coeff == Rational(-(k + 3), 4 * (n - 1)));
        }
}

TEST_CASE("interpolation divisors") {
    CHECK(divisor_interpolation(5, 1) == DivisorClass{5, Rational(-1, 2)});
    CHECK(ray_normalize(divisor_interpolation(5, 2)) ==
          DivisorClass{1, Rational(-1, 5)});
    CHECK(ray_normalize(divisor_interpolation(7, 2)) ==
          DivisorClass{1, Rational(-1, 7)});
    CHECK_THROWS_AS(divisor_interpolation(0, 1), PreconditionViolation);
}

TEST_CASE("intersection pairing examples") {
    // D_{n-1}(n) . C_n(n) = (n-1) - (1/2) 2(n-1) = 0, checked by hand here
    for (long long n = 2; n <= 50; ++n) {
        const Rational by_hand =
            Rational(n - 1) * 1 - Rational(1, 2) * Rational(2 * (n - 1));
        CHECK(by_hand == Rational(0));
        CHECK(intersect(divisor_Dk(n, n - 1), CurveClass::line_pencil(n, n)) ==
              Rational(0));
    }
    // H - (1/5)B against the conic pencil through 6 points
    CHECK(intersect(DivisorClass{1, Rational(-1, 5)},
                    CurveClass::conic_pencil(6, 6)) == Rational(0));
    // kH - B/2 meets the diagonal fiber in one point: -2 * (-1/2)
    for (long long k = 1; k <= 10; ++k)
        CHECK(intersect(DivisorClass{Rational(k), Rational(-1, 2)},
                        CurveClass::diagonal(4)) == Rational(1));
}

TEST_CASE("ambient mismatch is rejected") {
    CHECK_THROWS_AS(intersect(divisor_Dk(3, 2), CurveClass::diagonal(4)),
                    MismatchedAmbient);
    CHECK_NOTHROW(intersect(DivisorClass{1, 1}, CurveClass::diagonal(4)));
}

TEST_CASE("ray normalization") {
    CHECK(ray_normalize(DivisorClass{4, Rational(-1, 2)}) ==
          DivisorClass{1, Rational(-1, 8)});
    CHECK(ray_normalize(DivisorClass{3, -1}) == DivisorClass{1, Rational(-1, 3)});
    CHECK(ray_normalize(DivisorClass{0, 7}) == DivisorClass{0, 1});
    CHECK_THROWS_AS(ray_normalize(DivisorClass{0, 0}), ZeroClass);
    CHECK_THROWS_AS(ray_normalize(DivisorClass{-1, 2}), PreconditionViolation);
}

TEST_CASE("pairing is bilinear") {
    for (int i = 0; i < 500; ++i) {
        const long long n = 2 + static_cast<long long>(rng() % 30);
        const Rational a = random_rational(), b = random_rational();
        const DivisorClass d1{random_rational(), random_rational()};
        const DivisorClass d2{random_rational(), random_rational()};
        const CurveClass c = random_curve(n);
        const DivisorClass combo = a * d1 + b * d2;
        CHECK(intersect(combo, c) ==
              a * intersect(d1, c) + b * intersect(d2, c));
    }
}

TEST_CASE("moving curves are dual to the interpolation edges") {
    for (long long r = 1; r <= 10; ++r)
        for (long long s = 1; s <= r; ++s) {
            const DivisorClass de = divisor_interpolation(r * r - r + s, r);
            CHECK(intersect(de, CurveClass::moving_e(r, s)) == Rational(0));
            const DivisorClass df{Rational(r * r + r + s - 1),
                                  Rational(-(r + 2), 2)};
            CHECK(intersect(df, CurveClass::moving_f(r, s)) == Rational(0));
        }
}

TEST_CASE("curve parameter validation") {
    CHECK_THROWS_AS(CurveClass::line_pencil(3, 4), PreconditionViolation);
    CHECK_THROWS_AS(CurveClass::line_pencil(3, 0), PreconditionViolation);
    CHECK_THROWS_AS(CurveClass::conic_pencil(5, 6), PreconditionViolation);
    CHECK_THROWS_AS(CurveClass::moving_e(3, 4), PreconditionViolation);
    CHECK(CurveClass::moving_e(3, 1).n == 7);
}

TEST_CASE("divisor strings") {
    CHECK(divisor_to_string(DivisorClass{1, Rational(-5, 24)}) == "H - 5/24 B");
    CHECK(divisor_to_string(DivisorClass{0, 1}) == "B");
    CHECK(divisor_to_string(DivisorClass{1, 0}) == "H");
    CHECK(divisor_to_string(DivisorClass{5, -1}) == "5H - B");
    CHECK(divisor_to_string(DivisorClass{Rational(3), Rational(1, 2)}) ==
          "3H + 1/2 B");
    CHECK(divisor_to_string(DivisorClass{0, 0}) == "0");
}
