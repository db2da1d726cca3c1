#include <doctest.h>

#include <json.hpp>

#include "hsw/render.hpp"

using namespace hsw;

namespace {

std::size_t count_substr(const std::string& hay, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

} // namespace

TEST_CASE("walls JSON golden bytes for n = 2") {
    const std::string out = render_walls(2, wall_list(2), OutputFormat::Json);
    CHECK(out ==
          "[{\"center\":\"-5/2\",\"radius_sq\":\"9/4\",\"witnesses\":"
          "[{\"kind\":\"rank_one\",\"k\":1,\"lW\":0}],\"status\":\"exact\"}]");
}

TEST_CASE("cone JSON golden bytes for n = 7") {
    const std::string out = render_cone(7, effective_cone(7), OutputFormat::Json);
    CHECK(out == "{\"status\":\"exact\",\"edge\":\"H - 5/24 B\",\"via\":\"clause-2\"}");
}

TEST_CASE("rendering is reproducible byte for byte") {
    CHECK(render_walls(9, wall_list(9), OutputFormat::Json) ==
          render_walls(9, wall_list(9), OutputFormat::Json));
    CHECK(svg_plot(6, wall_list(6), false) == svg_plot(6, wall_list(6), false));
    CHECK(render_mori(8, OutputFormat::Text) == render_mori(8, OutputFormat::Text));
}

TEST_CASE("emitted JSON reparses to identical bytes") {
    for (const std::string& s :
         {render_walls(9, wall_list(9), OutputFormat::Json),
          render_mori(8, OutputFormat::Json),
          render_correspond(check_bijection(6), OutputFormat::Json),
          render_gaeta(7, OutputFormat::Json),
          render_cone(17, effective_cone(17), OutputFormat::Json)}) {
        const auto parsed = nlohmann::ordered_json::parse(s);
        CHECK(parsed.dump() == s);
    }
}

TEST_CASE("walls text marks the collapsing wall") {
    const std::string out = render_walls(7, wall_list(7), OutputFormat::Text);
    CHECK(count_substr(out, "COLLAPSING") == 1);
    CHECK(out.find("-39/10") != std::string::npos);
    CHECK(out.find("(2,-5,11/2)") != std::string::npos);
    // header + column line + one row per wall
    CHECK(count_substr(out, "\n") == 2 + wall_list(7).walls.size());
}

TEST_CASE("witness names") {
    CHECK(witness_name(RankOneWitness{3, 0}) == "O(-3)");
    CHECK(witness_name(RankOneWitness{2, 1}) == "I_p(-2)");
    CHECK(witness_name(RankOneWitness{1, 3}) == "I_W(-1), l(W)=3");
    CHECK(witness_name(HigherRankWitness{ChernCharacter(2, -5, Rational(11, 2)),
                                         WitnessStatus::Confirmed,
                                         ExclusionReason::None}) ==
          "ch=(2,-5,11/2) [confirmed]");
}

TEST_CASE("SVG structure") {
    const std::string svg6 = svg_plot(6, wall_list(6), false);
    CHECK(count_substr(svg6, "<path class=\"wall\"") == 5);
    CHECK(count_substr(svg6, "<path") == 5);  // nothing else draws a path
    CHECK(svg6.find("viewBox=") != std::string::npos);
    CHECK(svg6.rfind("</svg>\n") == svg6.size() - 7);

    const std::string svg2 = svg_plot(2, wall_list(2), true);
    CHECK(count_substr(svg2, "<path class=\"wall\"") == 1);
    CHECK(count_substr(svg2, "<path class=\"quiver\"") >= 1);
    // the k = 0 overlay disc spans [-2, 0]
    CHECK(svg2.find("M -2.00000000000 0 A 1 1 0 0 1 0") != std::string::npos);

    const std::string svg9 = svg_plot(9, wall_list(9), false);
    CHECK(count_substr(svg9, "<path class=\"wall\"") == 7);
}

TEST_CASE("mori text contains the table rows") {
    const std::string out = render_mori(6, OutputFormat::Text);
    CHECK(out.find("D_{T(1)}(6)") != std::string::npos);
    CHECK(out.find("Q_6(6)") != std::string::npos);
    CHECK(out.find("H - 1/5 B") != std::string::npos);
}
