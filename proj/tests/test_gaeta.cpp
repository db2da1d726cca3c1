#include <doctest.h>

#include <optional>
#include <vector>

#include "hsw/gaeta.hpp"

using namespace hsw;

namespace {

struct BruteRes {
    long long d, a, e, b;  // e >= 0: middle term O(-d-1)^e; e < 0: kernel term
};

// Independent oracle: enumerate all exponent patterns
//   a O(-d) + e O(-d-1) - b O(-d-2), a >= 1, b >= 0
// whose alternating character sum is (1, 0, -n), and keep the minimal d.
std::optional<BruteRes> brute_force_resolution(long long n) {
    for (long long d = 1; d <= 14; ++d) {
        std::vector<BruteRes> found;
        for (long long a = 1; a <= 120; ++a)
            for (long long e = -120; e <= 120; ++e) {
                const long long b = a + e - 1;  // rank equation
                if (b < 0 || b > 240) continue;
                const long long deg = -d * a - (d + 1) * e + (d + 2) * b;
                if (deg != 0) continue;
                const long long twice_ch2 =
                    d * d * a + (d + 1) * (d + 1) * e - (d + 2) * (d + 2) * b;
                if (twice_ch2 != -2 * n) continue;
                found.push_back({d, a, e, b});
            }
        if (!found.empty()) {
            REQUIRE(found.size() == 1);
            return found.front();
        }
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("gaeta resolution worked examples") {
    const GaetaResolution r7 = gaeta_resolution(7);
    CHECK(r7.d == 3);
    CHECK(r7.form == GaetaResolution::Form::B);
    CHECK(r7.a == 3);
    CHECK(r7.c_prime == 1);
    CHECK(r7.b == 1);

    const GaetaResolution r4 = gaeta_resolution(4);
    CHECK(r4.d == 2);
    CHECK(r4.form == GaetaResolution::Form::A);
    CHECK(r4.a == 2);
    CHECK(r4.c == 0);
    CHECK(r4.b == 1);

    const GaetaResolution r8 = gaeta_resolution(8);
    CHECK(r8.d == 3);
    CHECK(r8.form == GaetaResolution::Form::A);
    CHECK(r8.a == 2);
    CHECK(r8.c == 1);
    CHECK(r8.b == 2);

    CHECK_THROWS_AS(gaeta_resolution(1), PreconditionViolation);
}

TEST_CASE("gaeta resolution matches the brute-force oracle for n <= 40") {
    for (long long n = 2; n <= 40; ++n) {
        const auto brute = brute_force_resolution(n);
        REQUIRE(brute.has_value());
        const GaetaResolution res = gaeta_resolution(n);
        CHECK(res.d == brute->d);
        CHECK(res.a == brute->a);
        CHECK(res.b == brute->b);
        if (brute->e >= 0) {
            CHECK(res.form == GaetaResolution::Form::A);
            CHECK(res.c == brute->e);
        } else {
            CHECK(res.form == GaetaResolution::Form::B);
            CHECK(res.c_prime == -brute->e);
        }
    }
}

TEST_CASE("character identity and exponent sanity up to 1000") {
    for (long long n = 2; n <= 1000; ++n) {
        const GaetaResolution res = gaeta_resolution(n);
        CHECK(res.character() == ideal_sheaf_character(n));
        CHECK(res.a >= 1);
        CHECK(res.b >= 0);
        CHECK(res.c >= 0);
        CHECK(res.c_prime >= 0);
        // only one of the two O(-d-1) exponents may be present
        CHECK((res.c == 0 || res.c_prime == 0));
    }
}

TEST_CASE("destabilizer candidates") {
    const auto c7 = generic_destabilizer_candidates(7);
    bool has_lead = false, has_coker = false;
    for (const auto& c : c7) {
        if (c.ch == ChernCharacter(3, -9, Rational(27, 2))) {
            has_lead = true;
            CHECK(c.center == Rational(-23, 6));
        }
        if (c.ch == ChernCharacter(2, -5, Rational(11, 2))) {
            has_coker = true;
            CHECK(c.center == Rational(-39, 10));
        }
    }
    CHECK(has_lead);
    CHECK(has_coker);

    for (const auto& c : generic_destabilizer_candidates(6))
        CHECK(c.center == Rational(-7, 2));

    bool has_cubic = false;
    for (const auto& c : generic_destabilizer_candidates(9))
        if (c.ch == ChernCharacter(1, -3, Rational(9, 2))) {
            has_cubic = true;
            CHECK(c.center == Rational(-9, 2));
        }
    CHECK(has_cubic);

    // every candidate has positive rank and negative degree
    for (long long n = 2; n <= 60; ++n)
        for (const auto& c : generic_destabilizer_candidates(n)) {
            CHECK(c.ch.ch0 > 0);
            CHECK(c.ch.ch1 < 0);
            CHECK(c.center == wall_center_for_ideal(n, c.ch));
        }
}

TEST_CASE("outermost candidate reproduces the collapsing centers for n <= 9") {
    const Rational golden[] = {Rational(-5, 2),  Rational(-5, 2), Rational(-3),
                               Rational(-7, 2),  Rational(-7, 2), Rational(-39, 10),
                               Rational(-25, 6), Rational(-9, 2)};
    for (long long n = 2; n <= 9; ++n)
        CHECK(outermost_candidate_center(n) == golden[n - 2]);
}

TEST_CASE("candidate walls are genuine semicircles") {
    // outermost center^2 > 2n, so the candidate collapsing wall has positive
    // radius for every n in range
    for (long long n = 2; n <= 300; ++n) {
        const Rational c = outermost_candidate_center(n);
        CHECK(c.squared() > Rational(2 * n));
    }
}
