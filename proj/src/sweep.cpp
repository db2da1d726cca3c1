#include "hsw/sweep.hpp"

namespace hsw {

namespace {

WallCensusRow census_one(long long n) {
    WallCensusRow row;
    row.n = n;
    const WallList list = wall_list(n);
    row.wall_count = list.walls.size();
    for (const auto& w : list.walls) row.witness_count += w.witnesses.size();
    row.collapse_center = list.walls.back().center;
    row.outermost_center = list.walls.front().center;
    return row;
}

GaetaSweepRow gaeta_one(long long n) {
    GaetaSweepRow row;
    row.n = n;
    const GaetaResolution res = gaeta_resolution(n);
    row.d = res.d;
    row.form_a = res.form == GaetaResolution::Form::A;
    row.identity_ok = res.character() == ideal_sheaf_character(n);
    row.exponents_ok =
        res.a >= 1 && res.b >= 0 && res.c >= 0 && res.c_prime >= 0;
    row.outermost_center = outermost_candidate_center(n);
    return row;
}

} // namespace

std::vector<WallCensusRow> wall_census_serial(long long n_lo, long long n_hi) {
    std::vector<WallCensusRow> rows(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (long long n = n_lo; n <= n_hi; ++n)
        rows[static_cast<std::size_t>(n - n_lo)] = census_one(n);
    return rows;
}

std::vector<WallCensusRow> wall_census(long long n_lo, long long n_hi) {
    std::vector<WallCensusRow> rows(static_cast<std::size_t>(n_hi - n_lo + 1));
    const long long count = n_hi - n_lo + 1;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i)
        rows[static_cast<std::size_t>(i)] = census_one(n_lo + i);
    return rows;
}

std::vector<GaetaSweepRow> gaeta_sweep_serial(long long n_lo, long long n_hi) {
    std::vector<GaetaSweepRow> rows(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (long long n = n_lo; n <= n_hi; ++n)
        rows[static_cast<std::size_t>(n - n_lo)] = gaeta_one(n);
    return rows;
}

std::vector<GaetaSweepRow> gaeta_sweep(long long n_lo, long long n_hi) {
    std::vector<GaetaSweepRow> rows(static_cast<std::size_t>(n_hi - n_lo + 1));
    const long long count = n_hi - n_lo + 1;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i)
        rows[static_cast<std::size_t>(i)] = gaeta_one(n_lo + i);
    return rows;
}

} // namespace hsw
