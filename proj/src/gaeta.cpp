#include "hsw/gaeta.hpp"

#include <algorithm>

namespace hsw {

ChernCharacter GaetaResolution::character() const {
    ChernCharacter mid = a * line_bundle_character(-d);
    if (form == Form::A) {
        mid += c * line_bundle_character(-d - 1);
        return mid - b * line_bundle_character(-d - 2);
    }
    return mid - c_prime * line_bundle_character(-d - 1) -
           b * line_bundle_character(-d - 2);
}

std::string GaetaResolution::to_string() const {
    auto twist_pow = [](long long m, long long e) {
        std::string s = "O(" + std::to_string(m) + ")";
        if (e != 1) s += "^" + std::to_string(e);
        return s;
    };
    std::string out = "0 -> ";
    if (form == Form::A) {
        out += twist_pow(-d - 2, b) + " -> " + twist_pow(-d, a);
        if (c > 0) out += " (+) " + twist_pow(-d - 1, c);
    } else {
        out += twist_pow(-d - 1, c_prime);
        if (b > 0) out += " (+) " + twist_pow(-d - 2, b);
        out += " -> " + twist_pow(-d, a);
    }
    out += " -> I_Z -> 0";
    return out;
}

GaetaResolution gaeta_resolution(long long n) {
    if (n < 2) throw PreconditionViolation("gaeta_resolution needs n >= 2");
    long long d = 1;
    while ((d + 1) * (d + 2) / 2 <= n) ++d;
    GaetaResolution res;
    res.n = n;
    res.d = d;
    res.a = (d + 1) * (d + 2) / 2 - n;
    const long long c = d + 2 - 2 * res.a;
    if (c >= 0) {
        res.form = GaetaResolution::Form::A;
        res.c = c;
        res.b = res.a + c - 1;
    } else {
        res.form = GaetaResolution::Form::B;
        res.c_prime = 2 * res.a - d - 2;
        res.b = res.a - res.c_prime - 1;
    }
    if (res.a < 1 || res.b < 0 || res.c < 0 || res.c_prime < 0 ||
        !(res.character() == ideal_sheaf_character(n)))
        throw InternalInconsistency("Gaeta exponents fail the Chern identity at n=" +
                                    std::to_string(n));
    return res;
}

std::vector<DestabCandidate> generic_destabilizer_candidates(long long n) {
    const GaetaResolution res = gaeta_resolution(n);
    std::vector<DestabCandidate> out;
    auto push = [&](const ChernCharacter& ch) {
        if (ch.ch0 <= 0 || ch.ch1 >= 0) return;
        for (const auto& c : out)
            if (c.ch == ch) return;
        out.push_back({ch, wall_center_for_ideal(n, ch)});
    };

    const ChernCharacter lead = res.a * line_bundle_character(-res.d);
    push(lead);
    if (res.form == GaetaResolution::Form::B) {
        for (long long j = 1; j <= res.c_prime; ++j)
            push(lead - j * line_bundle_character(-res.d - 1));
    } else {
        const ChernCharacter mid = lead + res.c * line_bundle_character(-res.d - 1);
        for (long long j = 0; j <= res.b; ++j)
            push(mid - j * line_bundle_character(-res.d - 2));
    }
    return out;
}

Rational outermost_candidate_center(long long n) {
    const auto cands = generic_destabilizer_candidates(n);
    Rational best = cands.front().center;
    for (const auto& c : cands) best = std::min(best, c.center);
    return best;
}

} // namespace hsw
