#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "hsw/cones.hpp"

using namespace hsw;

TEST_CASE("decompose_n") {
    CHECK(decompose_n(7).r == 3);
    CHECK(decompose_n(7).s == 1);
    CHECK(decompose_n(9).r == 3);
    CHECK(decompose_n(9).s == 3);
    CHECK(decompose_n(12).r == 4);
    CHECK(decompose_n(12).s == 2);
    for (long long n = 1; n <= 2000; ++n) {
        const auto d = decompose_n(n);
        CHECK(d.r * (d.r + 1) / 2 + d.s == n);
        CHECK(d.s >= 0);
        CHECK(d.s <= d.r);
    }
}

TEST_CASE("phi membership") {
    CHECK(phi_contains(Rational(1, 2)));
    CHECK(phi_contains(Rational(2, 3)));   // 4 + 6 - 9 > 0
    CHECK(!phi_contains(Rational(1, 3)));
    CHECK(phi_contains(Rational(0)));      // 0/1 is the first listed ratio
    CHECK(phi_contains(Rational(1)));
    CHECK(!phi_contains(Rational(3, 8)));
    CHECK(!phi_contains(Rational(5, 13)));
    CHECK(phi_contains(Rational(8, 13)));
    CHECK(phi_contains(Rational(21, 34)));
    CHECK_THROWS_AS(phi_contains(Rational(-1, 2)), NegativeInput);
}

TEST_CASE("phi Fibonacci chains") {
    // First ten even-over-odd consecutive Fibonacci ratios are members.
    long long a = 0, b = 1;
    for (int i = 0; i < 10; ++i) {
        CHECK(phi_contains(Rational(a, b)));
        // These sit below the golden-ratio cutoff, so the quadratic test alone
        // must reject them.
        if (a > 0) CHECK(a * a + a * b - b * b < 0);
        const long long a2 = a + b, b2 = a + 2 * b;
        a = a2;
        b = b2;
    }
    // Odd-index ratios F_{2k+1}/F_{2k+2} exceed 1/phi, so the quadratic test
    // accepts them.
    long long c = 1, d = 1;  // F_1/F_2
    for (int i = 0; i < 10; ++i) {
        CHECK(c * c + c * d - d * d > 0);
        CHECK(phi_contains(Rational(c, d)));
        const long long c2 = c + d, d2 = c + 2 * d;
        c = c2;
        d = d2;
    }
}

TEST_CASE("phi is monotone above the cutoff") {
    std::mt19937_64 rng(5150u);
    std::uniform_int_distribution<long long> num(0, 500), den(1, 500);
    int checked = 0;
    while (checked < 500) {
        const Rational x(num(rng), den(rng));
        const Int p = x.num(), q = x.den();
        if (p * p + p * q - q * q <= 0) continue;  // only quadratic members
        ++checked;
        CHECK(phi_contains(x));
        CHECK(phi_contains(x + Rational(1, 1 + (checked % 97))));
    }
}

TEST_CASE("nef cone") {
    auto [h2, d2] = nef_cone(2);
    CHECK(h2 == DivisorClass{1, 0});
    CHECK(ray_normalize(d2) == DivisorClass{1, Rational(-1, 2)});
    CHECK(nef_cone(6).second == DivisorClass{5, Rational(-1, 2)});
    CHECK(ray_normalize(nef_cone(6).second) == DivisorClass{1, Rational(-1, 10)});
    CHECK(ray_normalize(nef_cone(9).second) == DivisorClass{1, Rational(-1, 16)});
}

TEST_CASE("effective cone examples") {
    const ConeResult c7 = effective_cone(7);
    CHECK(c7.status == ConeStatus::Exact);
    CHECK(c7.lower_edge == DivisorClass{1, Rational(-5, 24)});
    CHECK(c7.provenance == "clause-2");

    const ConeResult c8 = effective_cone(8);
    CHECK(c8.status == ConeStatus::Exact);
    CHECK(c8.lower_edge == DivisorClass{1, Rational(-3, 16)});
    CHECK(c8.provenance == "clause-1");

    const ConeResult c12 = effective_cone(12);
    CHECK(c12.status == ConeStatus::Exact);
    CHECK(c12.lower_edge == DivisorClass{1, Rational(-1, 7)});
    CHECK(c12.provenance == "clause-1");
}

TEST_CASE("effective cone matches the tables for n = 2..9") {
    for (long long n = 2; n <= 9; ++n) {
        const ConeResult c = effective_cone(n);
        CHECK(c.status == ConeStatus::Exact);
        const auto& table = chamber_table(n);
        CHECK(ray_normalize(c.lower_edge) ==
              ray_normalize(table.rows.back().edge_ray));
    }
}

TEST_CASE("effective edge slopes do not increase from n=2 to n=9") {
    const Rational expected[] = {Rational(1, 2),  Rational(1, 2), Rational(1, 3),
                                 Rational(1, 4),  Rational(1, 4), Rational(5, 24),
                                 Rational(3, 16), Rational(1, 6)};
    Rational prev = Rational(1);
    for (long long n = 2; n <= 9; ++n) {
        const Rational alpha = -effective_cone(n).lower_edge.b_coeff;
        CHECK(alpha == expected[n - 2]);
        CHECK(alpha <= prev);
        prev = alpha;
    }
}

TEST_CASE("bounds-only cone carries a two-sided bracket") {
    const ConeResult c17 = effective_cone(17);  // r=5, s=2: neither clause fires
    CHECK(c17.status == ConeStatus::BoundsOnly);
    CHECK(c17.provenance == "cayley-2");        // s/r = 2/5 < 1/2
    CHECK(c17.lower_edge == DivisorClass{1, Rational(-7, 62)});
    REQUIRE(c17.bracket_inner_alpha.has_value());
    REQUIRE(c17.bracket_outer_alpha.has_value());
    CHECK(*c17.bracket_inner_alpha == Rational(5, 46));   // edge of n = 18
    CHECK(*c17.bracket_outer_alpha == Rational(7, 62));
    CHECK(*c17.bracket_inner_alpha <= *c17.bracket_outer_alpha);
}

TEST_CASE("mori wall rays") {
    const auto m6 = mori_wall_rays(6);
    CHECK(m6.complete);
    REQUIRE(m6.rays.size() == 5);
    const Rational expected6[] = {Rational(1, 10), Rational(1, 8), Rational(1, 6),
                                  Rational(1, 5), Rational(1, 4)};
    for (int i = 0; i < 5; ++i) CHECK(-m6.rays[i].b_coeff == expected6[i]);

    const auto m8 = mori_wall_rays(8);
    REQUIRE(m8.rays.size() == 7);
    const Rational expected8[] = {Rational(1, 14), Rational(1, 12), Rational(1, 10),
                                  Rational(1, 8),  Rational(1, 7),  Rational(1, 6),
                                  Rational(3, 16)};
    for (int i = 0; i < 7; ++i) CHECK(-m8.rays[i].b_coeff == expected8[i]);

    const auto m2 = mori_wall_rays(2);
    REQUIRE(m2.rays.size() == 1);
    CHECK(-m2.rays[0].b_coeff == Rational(1, 2));

    // Beyond the tables only the provable walls from degree-k hypersurfaces.
    const auto m12 = mori_wall_rays(12);
    CHECK(!m12.complete);
    REQUIRE(!m12.rays.empty());
    CHECK(-m12.rays.front().b_coeff == Rational(1, 22));  // k = 11
    CHECK(-m12.rays.back().b_coeff == Rational(1, 8));    // k = 4, 4*7/2 = 14 >= 12
}

TEST_CASE("stable base locus lookup") {
    // interior points of chambers
    CHECK(base_locus_at(6, DivisorClass{1, Rational(-3, 20)}).to_string(6) ==
          "L_5(6)");
    CHECK(base_locus_at(6, DivisorClass{1, Rational(-9, 50)}).to_string(6) ==
          "L_4(6)");
    CHECK(base_locus_at(8, DivisorClass{1, Rational(-17, 96)}).to_string(8) ==
          "L_4(8) u Q_7(8)");
    // wall rays belong to the chamber they bound from the larger-slope side
    CHECK(base_locus_at(6, DivisorClass{1, Rational(-1, 8)}).to_string(6) ==
          "L_6(6)");
    CHECK(base_locus_at(6, DivisorClass{1, Rational(-1, 5)}).to_string(6) ==
          "L_4(6)");
    // the nef boundary and the B side
    CHECK(base_locus_at(6, DivisorClass{1, Rational(-1, 10)}).is_empty());
    CHECK(base_locus_at(6, DivisorClass{1, 0}).is_empty());
    CHECK(base_locus_at(6, DivisorClass{0, 1}).to_string(6) == "B");
    CHECK(base_locus_at(6, DivisorClass{2, 3}).to_string(6) == "B");
    // errors
    CHECK_THROWS_AS(base_locus_at(6, DivisorClass{1, Rational(-3, 10)}), OutOfCone);
    CHECK_THROWS_AS(base_locus_at(6, DivisorClass{-1, 0}), OutOfCone);
    CHECK_THROWS_AS(base_locus_at(10, DivisorClass{1, Rational(-1, 8)}),
                    UnsupportedN);
    CHECK_THROWS_AS(base_locus_at(6, DivisorClass{0, 0}), ZeroClass);
}

TEST_CASE("stable base loci nest outward") {
    for (long long n = 2; n <= 9; ++n) {
        const auto& table = chamber_table(n);
        // loci in table order: B-chamber, nef chamber, then outward
        std::vector<BaseLocusDescriptor> loci;
        for (const auto& row : table.rows)
            if (row.locus_below) loci.push_back(*row.locus_below);
        REQUIRE(loci.size() >= 2);
        CHECK(loci[0].to_string(n) == "B");
        CHECK(loci[1].is_empty());
        CHECK(descriptor_contained(loci[1], loci[0]));
        for (std::size_t i = 1; i + 1 < loci.size(); ++i)
            CHECK(descriptor_contained(loci[i], loci[i + 1]));
    }
}

TEST_CASE("chamber data file matches the embedded copy") {
    std::ifstream in(std::string(HSW_SOURCE_DIR) + "/data/chamber_tables.txt",
                     std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == chamber_tables_text());
}

TEST_CASE("chamber table structure") {
    CHECK(chamber_table(6).rows.size() == 7);
    CHECK(chamber_table(2).rows.size() == 3);
    CHECK(chamber_table(8).rows.size() == 9);
    CHECK(chamber_table(8).rows[6].divisor_name == "D_{T(2)}(8)");
    CHECK(chamber_table(7).rows[5].dual_curves.size() == 2);
    CHECK_THROWS_AS(chamber_table(1), UnsupportedN);
    CHECK_THROWS_AS(chamber_table(10), UnsupportedN);
}
