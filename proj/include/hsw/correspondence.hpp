#pragma once

#include <utility>
#include <vector>

#include "hsw/cones.hpp"
#include "hsw/walls.hpp"

namespace hsw {

// Dictionary between stable-base-locus walls H + (1/2y)B (y < 0) and
// Bridgeland wall centers x, via x = y - 3/2.  The ray H - (1/(2d))B
// corresponds to y = -d; the sign flip happens here and nowhere else.

// y -> x = y - 3/2.  Throws NonNegativeInput for y >= 0.
Rational mori_to_x(const Rational& y);

// x -> the ray H - (1/(2d))B with d = -(x + 3/2).  Throws OutOfRange for
// x >= -3/2.
DivisorClass x_to_mori(const Rational& x);

// y-parameter of a wall ray H - aB (a > 0):  y = -1/(2a).
Rational ray_to_y(const DivisorClass& ray);

struct CorrespondenceReport {
    long long n = 0;
    std::vector<std::pair<DivisorClass, Rational>> pairs;  // (mori ray, wall center)
    std::vector<DivisorClass> unmatched_mori;
    std::vector<Rational> unmatched_bridgeland;
    bool bijection = false;  // true iff both unmatched lists are empty
};

// Pairs mori_wall_rays(n) with wall_list(n) through x = y - 3/2; exact table
// data exists only for n in 2..9 (UnsupportedN otherwise).
CorrespondenceReport check_bijection(long long n);

} // namespace hsw
