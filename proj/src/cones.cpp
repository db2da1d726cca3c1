#include "hsw/cones.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hsw {

namespace detail {
const std::string& chamber_tables_raw();
}

Decomposition decompose_n(long long n) {
    if (n < 1) throw PreconditionViolation("decompose_n needs n >= 1");
    long long r = 1;
    while ((r + 1) * (r + 2) / 2 <= n) ++r;
    return {n, r, n - r * (r + 1) / 2};
}

bool phi_contains(const Rational& alpha) {
    if (alpha.sign() < 0) throw NegativeInput("phi_contains needs alpha >= 0");
    const Int p = alpha.num(), q = alpha.den();
    if (p * p + p * q - q * q > 0) return true;  // alpha > 1/phi, exactly
    // Even-over-odd consecutive Fibonacci ratios F_{2k}/F_{2k+1}.
    Int a = 0, b = 1;
    while (b <= q) {
        if (a == p && b == q) return true;
        Int a2 = a + b, b2 = a + 2 * b;
        a = a2;
        b = b2;
    }
    return false;
}

std::pair<DivisorClass, DivisorClass> nef_cone(long long n) {
    if (n < 2) throw PreconditionViolation("nef_cone needs n >= 2");
    return {DivisorClass{1, 0, n}, divisor_Dk(n, n - 1)};
}

namespace {

// Edge slope a in H - aB when one of the two interpolation clauses applies.
struct ExactEdge {
    Rational alpha;
    const char* clause;
};

std::optional<ExactEdge> exact_edge(long long n) {
    const auto [nn, r, s] = decompose_n(n);
    if (phi_contains(Rational(s, r)))
        return ExactEdge{Rational(r, 2 * (r * r - r + s)), "clause-1"};
    if (s >= 1 && phi_contains(Rational(1) - Rational(s + 1, r + 2)))
        return ExactEdge{Rational(r + 2, 2 * (r * r + r + s - 1)), "clause-2"};
    return std::nullopt;
}

DivisorClass edge_ray(const Rational& alpha, long long n) {
    return {1, -alpha, n};
}

} // namespace

ConeResult effective_cone(long long n) {
    if (n < 2) throw PreconditionViolation("effective_cone needs n >= 2");
    ConeResult res;
    res.upper_edge = divisor_B();
    if (auto e = exact_edge(n)) {
        res.status = ConeStatus::Exact;
        res.lower_edge = edge_ray(e->alpha, n);
        res.provenance = e->clause;
        return res;
    }
    const auto [nn, r, s] = decompose_n(n);
    res.status = ConeStatus::BoundsOnly;
    if (Rational(s, r) >= Rational(1, 2)) {
        res.lower_edge = edge_ray(Rational(r, 2 * (r * r - r + s)), n);
        res.provenance = "cayley-1";
    } else {
        res.lower_edge = edge_ray(Rational(r + 2, 2 * (r * r + r + s - 1)), n);
        res.provenance = "cayley-2";
    }
    // Two-sided bracket from restriction between consecutive Hilbert schemes:
    // the cone of n+1 points sits inside the cone of n points.
    Rational outer = -res.lower_edge.b_coeff;
    for (long long m = n - 1; m >= 2; --m) {
        if (auto e = exact_edge(m)) {
            outer = std::min(outer, e->alpha);
            break;
        }
    }
    res.bracket_outer_alpha = outer;
    for (long long m = n + 1;; ++m) {
        if (auto e = exact_edge(m)) {  // triangular n are exact, so this ends
            res.bracket_inner_alpha = e->alpha;
            break;
        }
    }
    return res;
}

// ---- chamber tables --------------------------------------------------------

namespace {

DivisorClass parse_ray_token(const std::string& tok, long long n) {
    if (tok == "B") return {0, 1, n};
    if (tok == "H") return {1, 0, n};
    if (tok.rfind("H-", 0) == 0 && tok.size() > 3 && tok.back() == 'B')
        return {1, -Rational::parse(tok.substr(2, tok.size() - 3)), n};
    throw InternalInconsistency("bad ray token in chamber data: " + tok);
}

CurveClass parse_curve_token(const std::string& tok, long long n) {
    if (tok == "C") return CurveClass::diagonal(n);
    if (tok.rfind("C_", 0) == 0)
        return CurveClass::line_pencil(n, std::stoll(tok.substr(2)));
    if (tok.rfind("A2_", 0) == 0)
        return CurveClass::conic_pencil(n, std::stoll(tok.substr(3)));
    throw InternalInconsistency("bad curve token in chamber data: " + tok);
}

BaseLocusDescriptor parse_locus_tokens(const std::vector<std::string>& toks) {
    BaseLocusDescriptor d;
    for (const auto& t : toks) {
        if (t == "Empty") continue;
        if (t == "B") d.atoms.push_back({LocusKind::BLocus, 0});
        else if (t.rfind("L_", 0) == 0)
            d.atoms.push_back({LocusKind::Linear, std::stoll(t.substr(2))});
        else if (t.rfind("Q_", 0) == 0)
            d.atoms.push_back({LocusKind::Conic, std::stoll(t.substr(2))});
        else
            throw InternalInconsistency("bad locus token in chamber data: " + t);
    }
    return d;
}

std::map<long long, ChamberTable> parse_all_tables(const std::string& text) {
    std::map<long long, ChamberTable> tables;
    std::istringstream in(text);
    std::string line;
    ChamberTable current;
    bool in_table = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "table") {
            std::string head;
            ls >> head;
            current = ChamberTable{std::stoll(head.substr(2)), {}};
            in_table = true;
        } else if (word == "row") {
            if (!in_table) throw InternalInconsistency("row outside table block");
            ChamberRow row;
            std::string tok;
            while (ls >> tok) {
                if (tok.rfind("ray=", 0) == 0)
                    row.edge_ray = parse_ray_token(tok.substr(4), current.n);
                else if (tok.rfind("divisor=", 0) == 0)
                    row.divisor_name = tok.substr(8);
                else if (tok.rfind("dual=", 0) == 0) {
                    std::istringstream cs(tok.substr(5));
                    std::string c;
                    while (std::getline(cs, c, ','))
                        row.dual_curves.push_back(parse_curve_token(c, current.n));
                }
            }
            current.rows.push_back(std::move(row));
        } else if (word == "locus") {
            std::vector<std::string> toks;
            std::string t;
            while (ls >> t) toks.push_back(t);
            if (current.rows.empty())
                throw InternalInconsistency("locus before first row");
            current.rows.back().locus_below = parse_locus_tokens(toks);
        } else if (word == "end") {
            tables[current.n] = std::move(current);
            in_table = false;
        } else {
            throw InternalInconsistency("bad chamber data line: " + line);
        }
    }
    return tables;
}

const std::map<long long, ChamberTable>& all_tables() {
    static const std::map<long long, ChamberTable> tables =
        parse_all_tables(detail::chamber_tables_raw());
    return tables;
}

} // namespace

const std::string& chamber_tables_text() { return detail::chamber_tables_raw(); }

const ChamberTable& chamber_table(long long n) {
    const auto& t = all_tables();
    auto it = t.find(n);
    if (it == t.end())
        throw UnsupportedN("chamber tables cover n = 2..9 only");
    return it->second;
}

std::string BaseLocusDescriptor::to_string(long long n) const {
    if (atoms.empty()) return "Empty";
    std::string out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) out += " u ";
        const auto& a = atoms[i];
        switch (a.kind) {
            case LocusKind::BLocus: out += "B"; break;
            case LocusKind::Linear:
                out += "L_" + std::to_string(a.k) + "(" + std::to_string(n) + ")";
                break;
            case LocusKind::Conic:
                out += "Q_" + std::to_string(a.k) + "(" + std::to_string(n) + ")";
                break;
        }
    }
    return out;
}

namespace {

bool atom_contained(const LocusAtom& inner, const LocusAtom& outer) {
    if (outer.kind == LocusKind::BLocus) return inner.kind == LocusKind::BLocus;
    if (inner.kind == LocusKind::BLocus) return false;
    if (inner.kind == outer.kind) return outer.k <= inner.k;
    if (inner.kind == LocusKind::Linear && outer.kind == LocusKind::Conic)
        return outer.k <= inner.k + 2;
    return false;
}

} // namespace

bool descriptor_contained(const BaseLocusDescriptor& inner,
                          const BaseLocusDescriptor& outer) {
    for (const auto& a : inner.atoms) {
        bool ok = false;
        for (const auto& b : outer.atoms)
            if (atom_contained(a, b)) { ok = true; break; }
        if (!ok) return false;
    }
    return true;
}

MoriWallRays mori_wall_rays(long long n) {
    if (n < 2) throw PreconditionViolation("mori_wall_rays needs n >= 2");
    MoriWallRays out;
    if (n <= 9) {
        const auto& table = chamber_table(n);
        for (const auto& row : table.rows)
            if (row.edge_ray.h_coeff == Rational(1) && row.edge_ray.b_coeff.sign() < 0)
                out.rays.push_back(row.edge_ray);
        out.complete = true;
        return out;
    }
    for (long long k = n - 1; k >= 1 && k * (k + 3) / 2 >= n; --k)
        out.rays.push_back({1, Rational(-1, 2 * k), n});
    out.complete = false;
    return out;
}

BaseLocusDescriptor base_locus_at(long long n, const DivisorClass& ray) {
    if (n < 2 || n > 9) throw UnsupportedN("base_locus_at covers n = 2..9 only");
    DivisorClass r;
    try {
        r = ray_normalize(ray);
    } catch (const PreconditionViolation&) {
        throw OutOfCone("ray outside the effective cone");
    }
    if (r.h_coeff.is_zero()) return BaseLocusDescriptor{{{LocusKind::BLocus, 0}}};
    if (r.b_coeff.sign() > 0) return BaseLocusDescriptor{{{LocusKind::BLocus, 0}}};
    if (r.b_coeff.is_zero()) return BaseLocusDescriptor{};  // the ray H itself
    const Rational alpha = -r.b_coeff;
    const auto& table = chamber_table(n);
    // Rows beyond H carry increasing slopes; the chamber between consecutive
    // rows includes its larger-slope edge.
    const ChamberRow* prev = nullptr;
    for (const auto& row : table.rows) {
        if (row.edge_ray.h_coeff.is_zero()) continue;  // the B row
        const Rational row_alpha = -row.edge_ray.b_coeff;
        if (alpha <= row_alpha) {
            if (prev == nullptr) return BaseLocusDescriptor{};  // inside nef
            return *prev->locus_below;
        }
        prev = &row;
    }
    throw OutOfCone("ray lies beyond the effective edge");
}

} // namespace hsw
