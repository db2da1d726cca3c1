#pragma once

#include <cstddef>
#include <vector>

#include "hsw/gaeta.hpp"
#include "hsw/walls.hpp"

namespace hsw {

// Range kernels over n.  Each kernel has an OpenMP-parallel entry point and
// a serial reference; outputs are written into per-n slots, so the parallel
// results are bit-identical to the serial ones regardless of schedule or
// thread count.

struct WallCensusRow {
    long long n = 0;
    std::size_t wall_count = 0;
    std::size_t witness_count = 0;
    Rational collapse_center;
    Rational outermost_center;
};

std::vector<WallCensusRow> wall_census(long long n_lo, long long n_hi);
std::vector<WallCensusRow> wall_census_serial(long long n_lo, long long n_hi);

struct GaetaSweepRow {
    long long n = 0;
    long long d = 0;
    bool form_a = false;
    bool identity_ok = false;       // alternating Chern sum equals (1,0,-n)
    bool exponents_ok = false;      // all exponents nonnegative, a >= 1
    Rational outermost_center;
};

std::vector<GaetaSweepRow> gaeta_sweep(long long n_lo, long long n_hi);
std::vector<GaetaSweepRow> gaeta_sweep_serial(long long n_lo, long long n_hi);

} // namespace hsw
