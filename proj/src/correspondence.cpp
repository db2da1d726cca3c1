#include "hsw/correspondence.hpp"

#include <algorithm>

namespace hsw {

Rational mori_to_x(const Rational& y) {
    if (y.sign() >= 0) throw NonNegativeInput("mori_to_x needs y < 0");
    return y - Rational(3, 2);
}

DivisorClass x_to_mori(const Rational& x) {
    const Rational d = -(x + Rational(3, 2));
    if (d.sign() <= 0) throw OutOfRange("x_to_mori needs x < -3/2");
    return {1, Rational(-1) / (Rational(2) * d), 0};
}

Rational ray_to_y(const DivisorClass& ray) {
    const DivisorClass r = ray_normalize(ray);
    if (r.h_coeff != Rational(1) || r.b_coeff.sign() >= 0)
        throw PreconditionViolation("ray must have the form H - aB with a > 0");
    return Rational(1) / (Rational(2) * r.b_coeff);
}

CorrespondenceReport check_bijection(long long n) {
    if (n < 2 || n > 9)
        throw UnsupportedN("check_bijection covers n = 2..9 only");
    CorrespondenceReport rep;
    rep.n = n;

    std::vector<Rational> centers;
    for (const auto& w : wall_list(n).walls) centers.push_back(w.center);
    std::vector<bool> used(centers.size(), false);

    for (const auto& ray : mori_wall_rays(n).rays) {
        const Rational x = mori_to_x(ray_to_y(ray));
        bool matched = false;
        for (std::size_t i = 0; i < centers.size(); ++i) {
            if (!used[i] && centers[i] == x) {
                used[i] = true;
                rep.pairs.emplace_back(ray, x);
                matched = true;
                break;
            }
        }
        if (!matched) rep.unmatched_mori.push_back(ray);
    }
    for (std::size_t i = 0; i < centers.size(); ++i)
        if (!used[i]) rep.unmatched_bridgeland.push_back(centers[i]);
    rep.bijection = rep.unmatched_mori.empty() && rep.unmatched_bridgeland.empty();
    return rep;
}

} // namespace hsw
