#include "hsw/walls.hpp"

#include <algorithm>
#include <map>

#include "hsw/gaeta.hpp"

namespace hsw {

namespace {

long long to_ll(const Int& z) {
    if (!z.fits_slong_p()) throw InternalInconsistency("index exceeds machine range");
    return z.get_si();
}

bool witness_less(const WallWitness& a, const WallWitness& b) {
    if (a.index() != b.index()) return a.index() < b.index();  // rank-one first
    if (std::holds_alternative<RankOneWitness>(a)) {
        const auto& x = std::get<RankOneWitness>(a);
        const auto& y = std::get<RankOneWitness>(b);
        return std::tie(x.k, x.lW) < std::tie(y.k, y.lW);
    }
    const auto& x = std::get<HigherRankWitness>(a);
    const auto& y = std::get<HigherRankWitness>(b);
    if (x.ch.ch0 != y.ch.ch0) return x.ch.ch0 < y.ch.ch0;
    if (x.ch.ch1 != y.ch.ch1) return x.ch.ch1 < y.ch.ch1;
    if (x.ch.ch2 != y.ch.ch2) return x.ch.ch2 < y.ch.ch2;
    return static_cast<int>(x.status) < static_cast<int>(y.status);
}

bool witness_eq(const WallWitness& a, const WallWitness& b) {
    return !witness_less(a, b) && !witness_less(b, a);
}

void add_witness(Wall& w, const WallWitness& wit) {
    for (const auto& e : w.witnesses)
        if (witness_eq(e, wit)) return;
    w.witnesses.push_back(wit);
}

void sort_witnesses(Wall& w) {
    std::sort(w.witnesses.begin(), w.witnesses.end(), witness_less);
}

HigherRankWitness confirmed(long long r, long long c, Rational d) {
    return {ChernCharacter(r, c, std::move(d)), WitnessStatus::Confirmed,
            ExclusionReason::None};
}

// The n <= 9 picture is fully verified: centers of the innermost (collapsing)
// wall together with every witness attached to it.
struct GoldenCollapse {
    long long n;
    Rational center;
    std::vector<WallWitness> witnesses;
};

std::vector<GoldenCollapse> golden_collapses() {
    std::vector<GoldenCollapse> g;
    g.push_back({2, Rational(-5, 2), {RankOneWitness{1, 0}}});
    g.push_back({3, Rational(-5, 2),
                 {RankOneWitness{1, 1}, RankOneWitness{2, 0},
                  confirmed(2, -4, 4), confirmed(3, -6, 6)}});
    g.push_back({4, Rational(-3),
                 {RankOneWitness{2, 0}, confirmed(2, -4, 4)}});
    g.push_back({5, Rational(-7, 2), {RankOneWitness{1, 2}, RankOneWitness{2, 0}}});
    g.push_back({6, Rational(-7, 2),
                 {RankOneWitness{1, 3}, RankOneWitness{2, 1}, RankOneWitness{3, 0}}});
    g.push_back({7, Rational(-39, 10), {confirmed(2, -5, Rational(11, 2))}});
    g.push_back({8, Rational(-25, 6),
                 {RankOneWitness{3, 0}, confirmed(2, -6, 9)}});
    g.push_back({9, Rational(-9, 2),
                 {RankOneWitness{1, 5}, RankOneWitness{2, 2}, RankOneWitness{3, 0},
                  confirmed(2, -6, 9)}});
    return g;
}

} // namespace

Rational witness_center(long long n, const WallWitness& w) {
    if (std::holds_alternative<RankOneWitness>(w)) {
        const auto& r1 = std::get<RankOneWitness>(w);
        return wall_center_for_ideal(n, twisted_ideal_character(r1.k, r1.lW));
    }
    return wall_center_for_ideal(n, std::get<HigherRankWitness>(w).ch);
}

std::pair<Wall, WallListStatus> collapsing_wall(long long n) {
    if (n < 2) throw PreconditionViolation("collapsing_wall needs n >= 2");
    const Rational two_n{2 * n};
    if (n <= 9) {
        for (const auto& g : golden_collapses()) {
            if (g.n != n) continue;
            Wall w{g.center, g.center.squared() - two_n, g.witnesses};
            sort_witnesses(w);
            return {std::move(w), WallListStatus::Exact};
        }
    }
    const Rational center = outermost_candidate_center(n);
    Wall w{center, center.squared() - two_n, {}};
    for (const auto& cand : generic_destabilizer_candidates(n))
        if (cand.center == center)
            add_witness(w, HigherRankWitness{cand.ch, WitnessStatus::Candidate,
                                             ExclusionReason::None});
    sort_witnesses(w);
    return {std::move(w), WallListStatus::Candidate};
}

std::vector<Wall> rank_one_walls(long long n, const Rational& x_min) {
    if (n < 2) throw PreconditionViolation("rank_one_walls needs n >= 2");
    const Rational two_n{2 * n};
    if (x_min.sign() >= 0 || x_min.squared() < two_n)
        throw PreconditionViolation("x_min must satisfy x_min <= -sqrt(2n)");

    std::map<Rational, Wall> by_center;
    for (long long k = 1; k * k <= 2 * n; ++k) {
        // center(k, lW) = -n/k - k/2 + lW/k <= x_min
        const Rational base = Rational(-n, k) - Rational(k, 2);
        const Rational lw_cap = Rational(k) * x_min + Rational(n) + Rational(k * k, 2);
        if (lw_cap.sign() < 0) continue;
        const long long lw_max = to_ll(lw_cap.floor());
        for (long long lw = 0; lw <= lw_max; ++lw) {
            const Rational center = base + Rational(lw, k);
            const Rational radius_sq = center.squared() - two_n;
            if (radius_sq.sign() <= 0) continue;  // degenerate circle at the boundary
            auto [it, inserted] =
                by_center.try_emplace(center, Wall{center, radius_sq, {}});
            add_witness(it->second, RankOneWitness{k, lw});
        }
    }
    std::vector<Wall> out;
    out.reserve(by_center.size());
    for (auto& [c, w] : by_center) {
        sort_witnesses(w);
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<HigherRankWitness> higher_rank_search(
    long long n, const Rational& x_collapse, std::optional<long long> max_rank) {
    if (n < 2) throw PreconditionViolation("higher_rank_search needs n >= 2");
    const Rational two_n{2 * n};
    if (x_collapse.sign() >= 0 || x_collapse.squared() <= two_n)
        throw PreconditionViolation("x_collapse must lie strictly left of -sqrt(2n)");

    std::vector<HigherRankWitness> out;
    const Rational xc2 = x_collapse.squared();
    const Rational big_r = xc2 - two_n;  // radius^2 of the collapsing wall

    for (long long r = 2;; ++r) {
        // M_r^2 = n (2r-1)^2 / (2 r (r-1)), strictly decreasing to 2n.
        const Rational m2 = Rational(n * (2 * r - 1) * (2 * r - 1), 2 * r * (r - 1));
        if (m2 <= xc2) break;
        if (max_rank && r > *max_rank) {
            out.push_back({ChernCharacter(r, 0, 0), WitnessStatus::Truncated,
                           ExclusionReason::None});
            break;
        }

        // Integer degrees strictly inside ( r(x+sqrt(R)), (r-1)(x-sqrt(R)) ),
        // the interval swept as the center runs from -M_r to x_collapse.
        const Int dmin =
            floor_plus_sqrt(Rational(r) * x_collapse, Rational(r * r) * big_r) + 1;
        const Rational hi_base = Rational(r - 1) * x_collapse;
        const Rational hi_rad = Rational((r - 1) * (r - 1)) * big_r;
        Int dmax = floor_minus_sqrt(hi_base, hi_rad);
        if (cmp_to_radical(hi_base - Rational(dmax), hi_rad) == 0) dmax -= 1;

        if (dmin > dmax) {
            out.push_back({ChernCharacter(r, 0, 0), WitnessStatus::Excluded,
                           ExclusionReason::NoIntegerDegree});
            continue;
        }
        for (Int di = dmin; di <= dmax; ++di) {
            const long long d = to_ll(di);
            const long long D = -d;
            // m = 2 ch2 with center (m/2 + rn)/d in [-M_r, -sqrt(2n)):
            const Rational base{-2 * r * n};
            const Int m_hi = floor_plus_sqrt(base, Rational(4 * D * D) * m2);
            const Int m_lo = floor_plus_sqrt(base, Rational(4 * D * D) * two_n) + 1;
            for (Int mi = m_lo; mi <= m_hi; ++mi) {
                const long long m = to_ll(mi);
                const ChernCharacter ch(r, d, Rational(m, 2));
                WitnessStatus st = WitnessStatus::Candidate;
                ExclusionReason why = ExclusionReason::None;
                if ((d * d - m) % 2 != 0) {
                    st = WitnessStatus::Excluded;
                    why = ExclusionReason::NonIntegerC2;
                } else if (d * d - r * m < 0) {
                    st = WitnessStatus::Excluded;
                    why = ExclusionReason::BogomolovFail;
                } else if (wall_center_for_ideal(n, ch) >= x_collapse) {
                    st = WitnessStatus::Excluded;
                    why = ExclusionReason::InsideCollapse;
                }
                out.push_back({ch, st, why});
            }
        }
    }
    return out;
}

WallList wall_list(long long n, std::optional<long long> max_rank) {
    auto [collapse, status] = collapsing_wall(n);

    std::map<Rational, Wall> by_center;
    for (auto& w : rank_one_walls(n, collapse.center))
        by_center.emplace(w.center, std::move(w));

    auto& cw = by_center.try_emplace(collapse.center, Wall{collapse.center,
                                                           collapse.radius_sq,
                                                           {}})
                   .first->second;
    for (const auto& wit : collapse.witnesses) add_witness(cw, wit);

    WallList result;
    for (const auto& rec : higher_rank_search(n, collapse.center, max_rank)) {
        if (rec.status == WitnessStatus::Truncated) {
            result.truncated = true;
            add_witness(by_center.at(collapse.center), WallWitness{rec});
            continue;
        }
        if (rec.status != WitnessStatus::Candidate) continue;
        const Rational c = wall_center_for_ideal(n, rec.ch);
        auto [it, inserted] =
            by_center.try_emplace(c, Wall{c, c.squared() - Rational(2 * n), {}});
        add_witness(it->second, WallWitness{rec});
    }

    result.status = status;
    result.walls.reserve(by_center.size());
    for (auto& [c, w] : by_center) {
        sort_witnesses(w);
        result.walls.push_back(std::move(w));
    }
    return result;
}

} // namespace hsw
