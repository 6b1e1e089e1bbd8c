#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace yamabe {

/// 15-point Gauss-Legendre rule on [-1, 1]; nodes/weights are computed once
/// by Newton iteration on the Legendre polynomial, not tabulated.
struct GaussRule15 {
    std::array<double, 15> nodes{};
    std::array<double, 15> weights{};
};

const GaussRule15& gauss15();

namespace detail {

template <class F>
double gauss15_segment(F&& f, double a, double b) {
    const auto& rule = gauss15();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * acc;
}

template <class F>
double adaptive_segment(F&& f, double a, double b, double whole, double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gauss15_segment(f, a, mid);
    const double right = gauss15_segment(f, mid, b);
    const double sum = left + right;
    const double err = std::abs(sum - whole);
    if (err <= tol || depth >= 48) return sum;
    return adaptive_segment(f, a, mid, left, 0.5 * tol, depth + 1) +
           adaptive_segment(f, mid, b, right, 0.5 * tol, depth + 1);
}

}  // namespace detail

/// Adaptive Gauss-Legendre integral of f over [a, b] to absolute tolerance
/// tol. Bisection refines toward any endpoint where the integrand degenerates
/// (the volume weights vanish polynomially there), so no special splitting is
/// needed. Deterministic for a given (f, a, b, tol).
template <class F>
double integrate(F&& f, double a, double b, double tol = 1e-12) {
    if (a == b) return 0.0;
    const double whole = detail::gauss15_segment(f, a, b);
    return detail::adaptive_segment(f, a, b, whole, tol, 0);
}

}  // namespace yamabe
