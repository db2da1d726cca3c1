#pragma once

#include <string>

#include "hsw/cones.hpp"
#include "hsw/correspondence.hpp"
#include "hsw/gaeta.hpp"
#include "hsw/walls.hpp"

namespace hsw {

enum class OutputFormat { Text, Json };

// All JSON is emitted in canonical form: fixed key order, no whitespace,
// rationals as canonical "p/q" strings.  Identical inputs yield identical
// bytes.

std::string witness_name(const WallWitness& w);

std::string render_walls(long long n, const WallList& list, OutputFormat f);
std::string render_mori(long long n, OutputFormat f);
std::string render_cone(long long n, const ConeResult& cone, OutputFormat f);
std::string render_correspond(const CorrespondenceReport& rep, OutputFormat f);
std::string render_gaeta(long long n, OutputFormat f);

// Deterministic SVG of the wall system: one arc per wall, outermost first,
// labeled by center; optional unit-circle overlays for the quiver regions
// met by the walls.  Decimal conversion is rendering-only.
std::string svg_plot(long long n, const WallList& list, bool quiver_regions);

} // namespace hsw
