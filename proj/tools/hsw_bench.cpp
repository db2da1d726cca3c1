// Benchmark of the range kernels: OpenMP-parallel sweep vs the serial
// reference, with an equality check on the results.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hsw/sweep.hpp"

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

bool equal(const std::vector<hsw::WallCensusRow>& a,
           const std::vector<hsw::WallCensusRow>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].n != b[i].n || a[i].wall_count != b[i].wall_count ||
            a[i].witness_count != b[i].witness_count ||
            a[i].collapse_center != b[i].collapse_center ||
            a[i].outermost_center != b[i].outermost_center)
            return false;
    return true;
}

bool equal(const std::vector<hsw::GaetaSweepRow>& a,
           const std::vector<hsw::GaetaSweepRow>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].n != b[i].n || a[i].d != b[i].d || a[i].form_a != b[i].form_a ||
            a[i].identity_ok != b[i].identity_ok ||
            a[i].exponents_ok != b[i].exponents_ok ||
            a[i].outermost_center != b[i].outermost_center)
            return false;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    long long max_n = 400;
    if (argc > 1) max_n = std::stoll(argv[1]);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
    std::printf("%-28s %12s %12s %9s\n", "kernel", "serial (ms)", "parallel", "speedup");

    std::vector<hsw::WallCensusRow> ws, wp;
    const double ts1 = time_ms([&] { ws = hsw::wall_census_serial(2, max_n); });
    const double tp1 = time_ms([&] { wp = hsw::wall_census(2, max_n); });
    std::printf("%-28s %12.1f %12.1f %8.2fx  %s\n",
                ("wall_census 2.." + std::to_string(max_n)).c_str(), ts1, tp1,
                ts1 / tp1, equal(ws, wp) ? "match" : "MISMATCH");

    std::vector<hsw::GaetaSweepRow> gs, gp;
    const double ts2 = time_ms([&] { gs = hsw::gaeta_sweep_serial(2, 4 * max_n); });
    const double tp2 = time_ms([&] { gp = hsw::gaeta_sweep(2, 4 * max_n); });
    std::printf("%-28s %12.1f %12.1f %8.2fx  %s\n",
                ("gaeta_sweep 2.." + std::to_string(4 * max_n)).c_str(), ts2, tp2,
                ts2 / tp2, equal(gs, gp) ? "match" : "MISMATCH");

    return (equal(ws, wp) && equal(gs, gp)) ? 0 : 1;
}
