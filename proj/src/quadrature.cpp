#include "yamabe/quadrature.hpp"

#include <numbers>

namespace yamabe {

namespace {

// Legendre P_n(x) and its derivative, by the three-term recurrence.
void legendre(int n, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
}

GaussRule15 build_rule() {
    constexpr int n = 15;
    GaussRule15 rule;
    for (int i = 0; i < n; ++i) {
        // Chebyshev-like initial guess, polished by Newton.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p, dp;
        for (int it = 0; it < 100; ++it) {
            legendre(n, x, p, dp);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        legendre(n, x, p, dp);
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

const GaussRule15& gauss15() {
    static const GaussRule15 rule = build_rule();
    return rule;
}

}  // namespace yamabe
