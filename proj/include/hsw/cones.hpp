#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsw/picard.hpp"

namespace hsw {

// n = r(r+1)/2 + s with 0 <= s <= r; the pair (r,s) is unique.
struct Decomposition {
    long long n = 0;
    long long r = 0;
    long long s = 0;
};

Decomposition decompose_n(long long n);

// Membership in Phi = { a > 1/phi } u { 0/1, 1/2, 3/5, 8/13, 21/34, ... }
// (even-over-odd consecutive Fibonacci ratios), decided exactly: for
// a = p/q >= 0 in lowest terms, a > 1/phi iff p^2 + pq - q^2 > 0.
// Throws NegativeInput for a < 0.
bool phi_contains(const Rational& alpha);

// Nef cone edges (H, (n-1)H - B/2).
std::pair<DivisorClass, DivisorClass> nef_cone(long long n);

enum class ConeStatus { Exact, BoundsOnly };

struct ConeResult {
    ConeStatus status = ConeStatus::Exact;
    DivisorClass lower_edge;  // Exact: the extremal ray; BoundsOnly: the containment edge
    DivisorClass upper_edge;  // always B
    std::string provenance;   // "clause-1", "clause-2", "cayley-1", "cayley-2"
    // For BoundsOnly, a two-sided bracket on the true edge slope a in H - aB:
    // divisors with slope bracket_inner_alpha are known effective (restriction
    // from the nearest larger n with an exact cone), and the cone is contained
    // in slopes up to bracket_outer_alpha.
    std::optional<Rational> bracket_inner_alpha;
    std::optional<Rational> bracket_outer_alpha;
};

// Effective cone via the interpolation criteria: with n = r(r+1)/2 + s,
// edge H - r/(2(r^2-r+s)) B when s/r lies in Phi, else
// edge H - (r+2)/(2(r^2+r+s-1)) B when s >= 1 and 1 - (s+1)/(r+2) lies in
// Phi; otherwise only containment bounds are returned.
ConeResult effective_cone(long long n);

// ---- stable base locus chambers -------------------------------------------

enum class LocusKind { BLocus, Linear, Conic };

// Atom of a stable base locus: the exceptional divisor B, the locus L_k of
// schemes with a length-k collinear subscheme, or the locus Q_k of schemes
// with a length-k subscheme on a conic.
struct LocusAtom {
    LocusKind kind = LocusKind::BLocus;
    long long k = 0;
    friend bool operator==(const LocusAtom& a, const LocusAtom& b) {
        return a.kind == b.kind && a.k == b.k;
    }
};

// Symbolic union of atoms; empty list = empty stable base locus.
struct BaseLocusDescriptor {
    std::vector<LocusAtom> atoms;
    bool is_empty() const { return atoms.empty(); }
    std::string to_string(long long n) const;
    friend bool operator==(const BaseLocusDescriptor& a, const BaseLocusDescriptor& b) {
        return a.atoms == b.atoms;
    }
};

// inner is contained in outer under: Empty in everything; L_k in L_j and
// Q_k in Q_j for j <= k; L_k in Q_j for j <= k+2 (the collinear scheme plus
// any two further points lies on a line pair).
bool descriptor_contained(const BaseLocusDescriptor& inner,
                          const BaseLocusDescriptor& outer);

struct ChamberRow {
    DivisorClass edge_ray;
    std::string divisor_name;
    std::vector<CurveClass> dual_curves;
    // Stable base locus of the chamber between this ray and the next row's
    // ray; absent on the last row (the effective edge).
    std::optional<BaseLocusDescriptor> locus_below;
};

struct ChamberTable {
    long long n = 0;
    std::vector<ChamberRow> rows;  // B, H, then H - aB with a increasing
};

// Exact tables for n = 2..9, parsed once from the embedded copy of
// data/chamber_tables.txt.  Throws UnsupportedN outside that range.
const ChamberTable& chamber_table(long long n);

// The embedded data file (byte-identical to data/chamber_tables.txt).
const std::string& chamber_tables_text();

// Interior wall rays of the stable base locus decomposition, by increasing
// slope a in H - aB.  Exact (complete = true) for n <= 9; for larger n the
// provable-but-possibly-incomplete list H - 1/(2k) B over k(k+3)/2 >= n,
// k <= n-1.
struct MoriWallRays {
    std::vector<DivisorClass> rays;
    bool complete = false;
};

MoriWallRays mori_wall_rays(long long n);

// Stable base locus of the chamber containing the given ray (n in 2..9).
// A wall ray belongs to the chamber it bounds from the larger-slope side;
// the ray H itself has empty locus.  Throws OutOfCone outside [B, effective
// edge] and UnsupportedN for n outside 2..9.
BaseLocusDescriptor base_locus_at(long long n, const DivisorClass& ray);

} // namespace hsw
