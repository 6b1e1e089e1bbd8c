#include "yamabe/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace yamabe {

Rational gap_exact(const SpaceSpec& space, int k) {
    if (k < 0) throw std::invalid_argument("gap_exact: k must be >= 0");
    const long kk = k, n = space.n;
    return space.family == Family::CP ? Rational{4 * kk * (kk + n)}
                                      : Rational{4 * kk * (kk + 2 * n + 1)};
}

namespace {

// D(m): coefficient of the x^(m-1) term produced from x^m.
Rational descent(const SpaceSpec& space, int m) {
    const long mm = m;
    return space.family == Family::CP ? Rational{4 * mm * mm} : Rational{4 * mm * (mm + 1)};
}

}  // namespace

RationalPoly apply_L(const SpaceSpec& space, const Rational& mu, const RationalPoly& poly) {
    if (poly.is_zero()) return {};
    std::vector<Rational> out(poly.degree() + 1, Rational{0});
    for (int m = 0; m <= poly.degree(); ++m) {
        const Rational& c = poly.coeff(m);
        if (c == 0) continue;
        out[m] += c * (mu - gap_exact(space, m));
        if (m >= 1) out[m - 1] += c * descent(space, m);
    }
    return RationalPoly{std::move(out)};
}

EigenPolynomial eigenfunction(const SpaceSpec& space, int k) {
    if (k < 0) throw std::invalid_argument("eigenfunction: k must be >= 0");
    std::vector<Rational> c(k + 1, Rational{0});
    c[k] = 1;
    const Rational mu = gap_exact(space, k);
    for (int m = k - 1; m >= 0; --m)
        c[m] = -descent(space, m + 1) * c[m + 1] / (mu - gap_exact(space, m));
    Rational sum = 0;
    for (const auto& v : c) sum += v;
    if (sum == 0) throw std::logic_error("eigenfunction: vanishing value at r = 0");
    for (auto& v : c) v /= sum;
    return EigenPolynomial{space, k, RationalPoly{std::move(c)}};
}

ZeroCount count_zeros(const EigenPolynomial& p) {
    ZeroCount out;
    if (p.poly.degree() <= 0) return out;
    out.count = count_roots_open(p.poly, Rational{0}, Rational{1});
    out.all_simple = all_roots_simple(p.poly);
    return out;
}

double evaluate(const EigenPolynomial& p, double r) {
    if (!(r >= 0.0) || !(r <= pi_half))
        throw std::domain_error("evaluate: r must lie in [0, pi/2]");
    const double c = std::cos(r);
    return p.poly.eval_double(c * c);
}

}  // namespace yamabe
