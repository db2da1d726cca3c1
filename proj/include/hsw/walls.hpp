#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "hsw/bridgeland.hpp"

namespace hsw {

// Destabilizer I_W(-k) with l(W) = lW, i.e. character (1, -k, k^2/2 - lW);
// cuts the wall with center -n/k - k/2 + lW/k.
struct RankOneWitness {
    long long k = 0;
    long long lW = 0;
    friend bool operator==(const RankOneWitness& a, const RankOneWitness& b) {
        return a.k == b.k && a.lW == b.lW;
    }
};

enum class WitnessStatus { Confirmed, Candidate, Excluded, Truncated };

enum class ExclusionReason {
    None,
    NonIntegerC2,     // ch1^2/2 - ch2 not an integer: no such sheaf
    NoIntegerDegree,  // the rank's admissible degree interval contains no integer
    BogomolovFail,    // ch1^2 - 2 ch0 ch2 < 0
    InsideCollapse,   // wall coincides with or lies inside the collapsing wall
};

// Higher-rank destabilizer candidate.  Confirmed only when the destabilizing
// subobject is actually exhibited (golden data, n <= 9); search survivors are
// Candidate.  For NoIntegerDegree exclusions no character exists, so the
// record carries the sentinel (rank, 0, 0).
struct HigherRankWitness {
    ChernCharacter ch;
    WitnessStatus status = WitnessStatus::Candidate;
    ExclusionReason reason = ExclusionReason::None;
    friend bool operator==(const HigherRankWitness& a, const HigherRankWitness& b) {
        return a.ch == b.ch && a.status == b.status && a.reason == b.reason;
    }
};

using WallWitness = std::variant<RankOneWitness, HigherRankWitness>;

// Semicircular wall for ch = (1,0,-n): center x < -sqrt(2n) on the real
// axis, radius^2 = x^2 - 2n stored exactly.
struct Wall {
    Rational center;
    Rational radius_sq;
    std::vector<WallWitness> witnesses;
};

enum class WallListStatus { Exact, Candidate };

Rational witness_center(long long n, const WallWitness& w);

// Innermost actual wall: golden value for n <= 9 (status Exact); for larger
// n the outermost generic-destabilizer candidate (status Candidate).
std::pair<Wall, WallListStatus> collapsing_wall(long long n);

// All rank-one walls with center <= x_min, coinciding centers merged,
// outermost (most negative center) first.  The witnesses (k, lW) satisfy
// k^2 <= 2n, lW >= 0; taking x_min = the collapsing-wall center prunes
// exactly the circles swallowed by the collapse.
// Precondition: x_min <= -sqrt(2n) (decided by squaring).
std::vector<Wall> rank_one_walls(long long n, const Rational& x_min);

// Pruned search for higher-rank destabilizers cutting walls strictly outside
// the collapsing wall.  For each rank r >= 2 while the center bound
// M_r^2 = n(2r-1)^2 / (2r(r-1)) still exceeds x_collapse^2 (the bound
// decreases to 2n, so the loop terminates), integer degrees d are read off
// the swept interval ( r(x+sqrt(x^2-2n)), (r-1)(x-sqrt(x^2-2n)) ) at
// x = x_collapse, and half-integral ch2 values from the admissible center
// range.  Survivors come back as Candidate, near-misses as Excluded with a
// machine-readable reason.  max_rank caps the rank loop; a capped search
// appends a Truncated marker instead of silently stopping.
std::vector<HigherRankWitness> higher_rank_search(
    long long n, const Rational& x_collapse,
    std::optional<long long> max_rank = std::nullopt);

struct WallList {
    std::vector<Wall> walls;             // outermost first; collapse last
    WallListStatus status = WallListStatus::Exact;
    bool truncated = false;              // rank search capped by max_rank
};

// Full wall picture: rank-one walls down to the collapsing wall, golden or
// searched higher-rank witnesses attached to coinciding centers, candidate
// walls for search survivors, deduplicated by center.
WallList wall_list(long long n, std::optional<long long> max_rank = std::nullopt);

} // namespace hsw
