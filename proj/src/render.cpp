#include "hsw/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "hsw/quiver.hpp"

namespace hsw {

using json = nlohmann::ordered_json;

namespace {

const char* status_word(WitnessStatus s) {
    switch (s) {
        case WitnessStatus::Confirmed: return "confirmed";
        case WitnessStatus::Candidate: return "candidate";
        case WitnessStatus::Excluded: return "excluded";
        case WitnessStatus::Truncated: return "truncated";
    }
    return "?";
}

const char* reason_word(ExclusionReason r) {
    switch (r) {
        case ExclusionReason::None: return "";
        case ExclusionReason::NonIntegerC2: return "non_integer_c2";
        case ExclusionReason::NoIntegerDegree: return "no_integer_degree";
        case ExclusionReason::BogomolovFail: return "bogomolov_fail";
        case ExclusionReason::InsideCollapse: return "inside_collapse";
    }
    return "?";
}

json witness_json(const WallWitness& w) {
    json j;
    if (std::holds_alternative<RankOneWitness>(w)) {
        const auto& r1 = std::get<RankOneWitness>(w);
        j["kind"] = "rank_one";
        j["k"] = r1.k;
        j["lW"] = r1.lW;
        return j;
    }
    const auto& hr = std::get<HigherRankWitness>(w);
    j["kind"] = "higher_rank";
    j["ch"] = {std::to_string(hr.ch.ch0), std::to_string(hr.ch.ch1),
               hr.ch.ch2.to_string()};
    j["status"] = status_word(hr.status);
    if (hr.reason != ExclusionReason::None) j["reason"] = reason_word(hr.reason);
    return j;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s += std::string(width - s.size(), ' ');
    return s;
}

} // namespace

std::string witness_name(const WallWitness& w) {
    if (std::holds_alternative<RankOneWitness>(w)) {
        const auto& r1 = std::get<RankOneWitness>(w);
        if (r1.lW == 0) return "O(-" + std::to_string(r1.k) + ")";
        if (r1.lW == 1) return "I_p(-" + std::to_string(r1.k) + ")";
        return "I_W(-" + std::to_string(r1.k) + "), l(W)=" + std::to_string(r1.lW);
    }
    const auto& hr = std::get<HigherRankWitness>(w);
    std::string s = "ch=" + hr.ch.to_string() + " [" + status_word(hr.status);
    if (hr.reason != ExclusionReason::None)
        s += std::string(": ") + reason_word(hr.reason);
    return s + "]";
}

std::string render_walls(long long n, const WallList& list, OutputFormat f) {
    if (f == OutputFormat::Json) {
        json arr = json::array();
        const char* st = list.status == WallListStatus::Exact ? "exact" : "candidate";
        for (const auto& w : list.walls) {
            json jw;
            jw["center"] = w.center.to_string();
            jw["radius_sq"] = w.radius_sq.to_string();
            jw["witnesses"] = json::array();
            for (const auto& wit : w.witnesses) jw["witnesses"].push_back(witness_json(wit));
            jw["status"] = st;
            arr.push_back(std::move(jw));
        }
        return arr.dump();
    }
    std::ostringstream os;
    os << "Bridgeland walls for ch = (1,0," << -n << ")   ["
       << (list.status == WallListStatus::Exact ? "exact" : "candidate") << "]\n";
    os << pad("center", 12) << pad("radius_sq", 12) << "witnesses\n";
    for (std::size_t i = 0; i < list.walls.size(); ++i) {
        const auto& w = list.walls[i];
        os << pad(w.center.to_string(), 12) << pad(w.radius_sq.to_string(), 12);
        for (std::size_t j = 0; j < w.witnesses.size(); ++j) {
            if (j) os << "; ";
            os << witness_name(w.witnesses[j]);
        }
        if (i + 1 == list.walls.size()) os << "   COLLAPSING";
        os << "\n";
    }
    return os.str();
}

std::string render_mori(long long n, OutputFormat f) {
    const bool tabled = n >= 2 && n <= 9;
    if (f == OutputFormat::Json) {
        json j;
        j["n"] = n;
        if (tabled) {
            j["complete"] = true;
            j["table"] = json::array();
            const auto& table = chamber_table(n);
            for (const auto& row : table.rows) {
                json jr;
                jr["ray"] = divisor_to_string(row.edge_ray);
                jr["divisor"] = row.divisor_name;
                jr["dual_curves"] = json::array();
                for (const auto& c : row.dual_curves)
                    jr["dual_curves"].push_back(c.to_string());
                if (row.locus_below)
                    jr["locus_below"] = row.locus_below->to_string(n);
                else
                    jr["locus_below"] = nullptr;
                j["table"].push_back(std::move(jr));
            }
        } else {
            const auto rays = mori_wall_rays(n);
            j["complete"] = rays.complete;
            j["rays"] = json::array();
            for (const auto& r : rays.rays) j["rays"].push_back(divisor_to_string(r));
        }
        return j.dump();
    }
    std::ostringstream os;
    if (tabled) {
        os << "Stable base locus decomposition, n = " << n << " (complete)\n";
        os << pad("ray", 13) << pad("divisor", 34) << pad("dual curves", 22)
           << "chamber below\n";
        const auto& table = chamber_table(n);
        for (const auto& row : table.rows) {
            std::string curves;
            for (std::size_t i = 0; i < row.dual_curves.size(); ++i) {
                if (i) curves += ", ";
                curves += row.dual_curves[i].to_string();
            }
            os << pad(divisor_to_string(row.edge_ray), 13)
               << pad(row.divisor_name, 34) << pad(curves, 22)
               << (row.locus_below ? row.locus_below->to_string(n) : "-") << "\n";
        }
    } else {
        const auto rays = mori_wall_rays(n);
        os << "Known stable base locus walls, n = " << n
           << " (possibly incomplete)\n";
        for (const auto& r : rays.rays) os << divisor_to_string(r) << "\n";
    }
    return os.str();
}

std::string render_cone(long long n, const ConeResult& cone, OutputFormat f) {
    const bool exact = cone.status == ConeStatus::Exact;
    if (f == OutputFormat::Json) {
        json j;
        j["status"] = exact ? "exact" : "bounds-only";
        j["edge"] = divisor_to_string(cone.lower_edge);
        j["via"] = cone.provenance;
        if (!exact) {
            json b;
            b["inner"] = cone.bracket_inner_alpha->to_string();
            b["outer"] = cone.bracket_outer_alpha->to_string();
            j["bracket"] = std::move(b);
        }
        return j.dump();
    }
    std::ostringstream os;
    os << "Effective cone, n = " << n << ": spanned by "
       << divisor_to_string(cone.lower_edge) << " and B";
    if (exact) {
        os << " (exact, " << cone.provenance << ")\n";
    } else {
        os << " (containment only, " << cone.provenance << ")\n";
        os << "edge slope bracket: [" << cone.bracket_inner_alpha->to_string()
           << ", " << cone.bracket_outer_alpha->to_string() << "] in H - aB\n";
    }
    return os.str();
}

std::string render_correspond(const CorrespondenceReport& rep, OutputFormat f) {
    if (f == OutputFormat::Json) {
        json j;
        j["n"] = rep.n;
        j["pairs"] = json::array();
        for (const auto& [ray, x] : rep.pairs) {
            json p;
            p["ray"] = divisor_to_string(ray);
            p["x"] = x.to_string();
            j["pairs"].push_back(std::move(p));
        }
        j["unmatched_mori"] = json::array();
        for (const auto& r : rep.unmatched_mori)
            j["unmatched_mori"].push_back(divisor_to_string(r));
        j["unmatched_bridgeland"] = json::array();
        for (const auto& x : rep.unmatched_bridgeland)
            j["unmatched_bridgeland"].push_back(x.to_string());
        j["bijection"] = rep.bijection;
        return j.dump();
    }
    std::ostringstream os;
    os << "Mori wall <-> Bridgeland wall, n = " << rep.n << "\n";
    for (const auto& [ray, x] : rep.pairs)
        os << pad(divisor_to_string(ray), 14) << "<->   x = " << x.to_string() << "\n";
    for (const auto& r : rep.unmatched_mori)
        os << pad(divisor_to_string(r), 14) << "<->   (no Bridgeland wall)\n";
    for (const auto& x : rep.unmatched_bridgeland)
        os << pad("(no Mori wall)", 14) << "<->   x = " << x.to_string() << "\n";
    os << "BIJECTION: " << (rep.bijection ? "OK" : "FAIL") << " ("
       << rep.pairs.size() << " pairs)\n";
    return os.str();
}

std::string render_gaeta(long long n, OutputFormat f) {
    const GaetaResolution res = gaeta_resolution(n);
    const auto cands = generic_destabilizer_candidates(n);
    const Rational outermost = outermost_candidate_center(n);
    if (f == OutputFormat::Json) {
        json j;
        j["n"] = n;
        j["d"] = res.d;
        j["form"] = res.form == GaetaResolution::Form::A ? "A" : "B";
        json e;
        e["a"] = res.a;
        if (res.form == GaetaResolution::Form::A) e["c"] = res.c;
        else e["c_prime"] = res.c_prime;
        e["b"] = res.b;
        j["exponents"] = std::move(e);
        j["resolution"] = res.to_string();
        j["candidates"] = json::array();
        for (const auto& c : cands) {
            json jc;
            jc["ch"] = {std::to_string(c.ch.ch0), std::to_string(c.ch.ch1),
                        c.ch.ch2.to_string()};
            jc["center"] = c.center.to_string();
            j["candidates"].push_back(std::move(jc));
        }
        j["outermost_center"] = outermost.to_string();
        return j.dump();
    }
    std::ostringstream os;
    os << "Gaeta resolution, n = " << n << " (d = " << res.d << ", form "
       << (res.form == GaetaResolution::Form::A ? "A" : "B") << "):\n  "
       << res.to_string() << "\n";
    os << "Destabilizer candidates:\n";
    for (const auto& c : cands)
        os << "  ch=" << pad(c.ch.to_string(), 16) << " center "
           << c.center.to_string() << "\n";
    os << "Outermost candidate center: " << outermost.to_string() << "\n";
    return os.str();
}

// ---- SVG -------------------------------------------------------------------

namespace {

constexpr int kSig = 12;

std::string dec(const Rational& r) { return decimal_string(r, kSig); }

} // namespace

std::string svg_plot(long long n, const WallList& list, bool quiver_regions) {
    if (list.walls.empty()) throw InternalInconsistency("no walls to plot");
    const Wall& outer = list.walls.front();
    const Rational rho_max = sqrt_lower_approx(outer.radius_sq, kSig);
    const Rational left = outer.center - rho_max - Rational(1, 2);
    const Rational top = rho_max + Rational(1, 2);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << dec(left)
       << " " << dec(-top) << " " << dec(-left) << " " << dec(top) << "\">\n";
    os << "<!-- Bridgeland walls for ch = (1,0," << -n << ") in the (s,t) plane -->\n";

    // s-axis with integer ticks.
    os << "<line class=\"axis\" x1=\"" << dec(left)
       << "\" y1=\"0\" x2=\"0\" y2=\"0\" stroke=\"black\" stroke-width=\"0.02\"/>\n";
    for (Int m = left.ceil(); m <= 0; ++m) {
        const std::string x = m.get_str();
        os << "<line class=\"tick\" x1=\"" << x << "\" y1=\"-0.08\" x2=\"" << x
           << "\" y2=\"0\" stroke=\"black\" stroke-width=\"0.02\"/>\n";
        os << "<text class=\"ticklabel\" x=\"" << x
           << "\" y=\"-0.15\" font-size=\"0.22\" text-anchor=\"middle\">" << x
           << "</text>\n";
    }

    for (const auto& w : list.walls) {
        const Rational rho = sqrt_lower_approx(w.radius_sq, kSig);
        const Rational x1 = w.center - rho;
        const Rational x2 = w.center + rho;
        os << "<path class=\"wall\" d=\"M " << dec(x1) << " 0 A " << dec(rho)
           << " " << dec(rho) << " 0 0 1 " << dec(x2)
           << " 0\" fill=\"none\" stroke=\"black\" stroke-width=\"0.03\"/>\n";
        os << "<text class=\"walllabel\" x=\"" << dec(w.center) << "\" y=\""
           << dec(-(rho - Rational(1, 5)))
           << "\" font-size=\"0.25\" text-anchor=\"middle\">"
           << w.center.to_string() << "</text>\n";
    }

    if (quiver_regions) {
        std::vector<long long> ks;
        for (const auto& w : list.walls)
            for (long long k : regions_meeting_wall(w))
                if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
        std::sort(ks.begin(), ks.end());
        for (long long k : ks) {
            const Rational c{k - 1};
            os << "<path class=\"quiver\" d=\"M " << dec(c - Rational(1))
               << " 0 A 1 1 0 0 1 " << dec(c + Rational(1))
               << " 0\" fill=\"none\" stroke=\"gray\" stroke-width=\"0.02\""
               << " stroke-dasharray=\"0.08 0.08\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace hsw
