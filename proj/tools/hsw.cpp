// hsw: exact wall-and-chamber calculator for the Hilbert scheme of n points
// in the projective plane.  All geometry is computed in exact rational
// arithmetic; JSON/text output is deterministic byte for byte.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsw/correspondence.hpp"
#include "hsw/quiver.hpp"
#include "hsw/render.hpp"
#include "hsw/sweep.hpp"

namespace {

using hsw::OutputFormat;
using json = nlohmann::ordered_json;

std::optional<long long> max_rank_from_env() {
    const char* v = std::getenv("HSW_MAX_RANK");
    if (v == nullptr || *v == '\0') return std::nullopt;
    try {
        return std::stoll(v);
    } catch (const std::exception&) {
        throw CLI::ValidationError("HSW_MAX_RANK", "must be an integer");
    }
}

std::array<long long, 3> parse_dims_csv(const std::string& s) {
    std::array<long long, 3> out{};
    std::istringstream in(s);
    std::string tok;
    for (int i = 0; i < 3; ++i) {
        if (!std::getline(in, tok, ',')) throw std::invalid_argument("need n0,n1,n2");
        out[i] = std::stoll(tok);
    }
    if (std::getline(in, tok, ',')) throw std::invalid_argument("need exactly 3 entries");
    return out;
}

hsw::RatTriple parse_chern_csv(const std::string& s) {
    std::istringstream in(s);
    std::string r, c, d;
    if (!std::getline(in, r, ',') || !std::getline(in, c, ',') ||
        !std::getline(in, d, ','))
        throw std::invalid_argument("need r,c,d");
    std::string extra;
    if (std::getline(in, extra, ',')) throw std::invalid_argument("need exactly 3 entries");
    return {hsw::Rational::parse(r), hsw::Rational::parse(c), hsw::Rational::parse(d)};
}

std::string triple_string(const hsw::RatTriple& t) {
    return "(" + t.r.to_string() + "," + t.c.to_string() + "," + t.d.to_string() + ")";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Mori chamber / Bridgeland wall calculator for Hilbert "
                 "schemes of points in the plane"};
    app.require_subcommand(1);

    bool want_json = false, want_text = false;
    app.add_flag("--json", want_json, "emit canonical JSON");
    app.add_flag("--text", want_text, "emit plain text (default)");

    long long n = 0;
    auto add_n = [&](CLI::App* sub) {
        sub->add_option("n", n, "number of points")
            ->required()
            ->check(CLI::Range(2ll, 1000000000ll));
        sub->fallthrough();
    };

    auto* cmd_walls = app.add_subcommand("walls", "Bridgeland walls for ch = (1,0,-n)");
    add_n(cmd_walls);
    auto* cmd_mori = app.add_subcommand("mori", "stable base locus walls and chambers");
    add_n(cmd_mori);
    auto* cmd_cone = app.add_subcommand("cone", "effective cone edge");
    add_n(cmd_cone);
    auto* cmd_corr = app.add_subcommand("correspond", "match Mori walls with Bridgeland walls");
    add_n(cmd_corr);
    auto* cmd_gaeta = app.add_subcommand("gaeta", "generic resolution and destabilizer candidates");
    add_n(cmd_gaeta);

    auto* cmd_quiver = app.add_subcommand("quiver", "dimension-vector arithmetic");
    cmd_quiver->require_subcommand(1);
    cmd_quiver->fallthrough();
    long long qn = 0, qd = 0, qk = 0;
    auto* quiver_dims = cmd_quiver->add_subcommand("dims", "dimension invariants of I_Z[1]");
    quiver_dims->add_option("n", qn, "number of points")->required()
        ->check(CLI::Range(1ll, 1000000000ll));
    quiver_dims->add_option("d", qd, "heart index (category built at -d)")->required()
        ->check(CLI::Range(0ll, 1000000000ll));
    quiver_dims->fallthrough();
    auto* quiver_conv = cmd_quiver->add_subcommand("convert", "dimensions <-> Chern classes");
    std::string dims_csv, chern_csv;
    quiver_conv->add_option("--k", qk, "exceptional-collection twist")->required();
    auto* opt_dims = quiver_conv->add_option("--dims", dims_csv, "n0,n1,n2");
    auto* opt_chern = quiver_conv->add_option("--chern", chern_csv, "r,c,d");
    opt_dims->excludes(opt_chern);
    quiver_conv->fallthrough();

    auto* cmd_phi = app.add_subcommand("phi", "membership in the golden-ratio set");
    std::string phi_arg;
    cmd_phi->add_option("alpha", phi_arg, "rational p/q")->required();
    cmd_phi->fallthrough();

    auto* cmd_plot = app.add_subcommand("plot", "SVG diagram of the wall system");
    add_n(cmd_plot);
    std::string out_path;
    bool overlay_quiver = false;
    cmd_plot->add_option("--out", out_path, "output SVG path")->required();
    cmd_plot->add_flag("--quiver-regions", overlay_quiver, "overlay quiver-region discs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    const OutputFormat fmt = want_json ? OutputFormat::Json : OutputFormat::Text;

    try {
        if (cmd_walls->parsed()) {
            std::cout << hsw::render_walls(n, hsw::wall_list(n, max_rank_from_env()), fmt);
            if (fmt == OutputFormat::Json) std::cout << "\n";
        } else if (cmd_mori->parsed()) {
            std::cout << hsw::render_mori(n, fmt);
            if (fmt == OutputFormat::Json) std::cout << "\n";
        } else if (cmd_cone->parsed()) {
            std::cout << hsw::render_cone(n, hsw::effective_cone(n), fmt);
            if (fmt == OutputFormat::Json) std::cout << "\n";
        } else if (cmd_corr->parsed()) {
            std::cout << hsw::render_correspond(hsw::check_bijection(n), fmt);
            if (fmt == OutputFormat::Json) std::cout << "\n";
        } else if (cmd_gaeta->parsed()) {
            std::cout << hsw::render_gaeta(n, fmt);
            if (fmt == OutputFormat::Json) std::cout << "\n";
        } else if (quiver_dims->parsed()) {
            const auto v = hsw::ideal_dims(qn, qd);
            if (fmt == OutputFormat::Json) {
                json j;
                j["n"] = qn;
                j["d"] = qd;
                j["dims"] = {v.n0, v.n1, v.n2};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "dims of I_Z[1], n=" << qn << ", d=" << qd << ": "
                          << v.to_string() << "\n";
            }
        } else if (quiver_conv->parsed()) {
            if (opt_dims->count() == 0 && opt_chern->count() == 0)
                throw CLI::RequiredError("--dims or --chern");
            if (opt_dims->count() > 0) {
                const auto d = parse_dims_csv(dims_csv);
                const auto ch =
                    hsw::dims_to_chern(qk, hsw::DimensionVector(d[0], d[1], d[2]));
                if (fmt == OutputFormat::Json) {
                    json j;
                    j["k"] = qk;
                    j["dims"] = {d[0], d[1], d[2]};
                    j["chern"] = {ch.r.to_string(), ch.c.to_string(), ch.d.to_string()};
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "chern" << triple_string(ch) << "\n";
                }
            } else {
                const auto in_ch = parse_chern_csv(chern_csv);
                const auto dims = hsw::chern_to_dims(qk, in_ch);
                if (fmt == OutputFormat::Json) {
                    json j;
                    j["k"] = qk;
                    j["chern"] = {in_ch.r.to_string(), in_ch.c.to_string(),
                                  in_ch.d.to_string()};
                    j["dims"] = {dims.r.to_string(), dims.c.to_string(),
                                 dims.d.to_string()};
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "dims" << triple_string(dims) << "\n";
                }
            }
        } else if (cmd_phi->parsed()) {
            hsw::Rational alpha;
            try {
                alpha = hsw::Rational::parse(phi_arg);
            } catch (const std::invalid_argument& e) {
                std::cerr << e.what() << "\n";
                return 2;
            }
            const bool in = hsw::phi_contains(alpha);
            if (fmt == OutputFormat::Json) {
                json j;
                j["alpha"] = alpha.to_string();
                j["in_phi"] = in;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << (in ? "true" : "false") << "\n";
            }
        } else if (cmd_plot->parsed()) {
            const std::string svg =
                hsw::svg_plot(n, hsw::wall_list(n, max_rank_from_env()), overlay_quiver);
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw hsw::IoError("cannot open '" + out_path + "' for writing");
            out << svg;
            if (!out) throw hsw::IoError("failed writing '" + out_path + "'");
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const hsw::domain_error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
