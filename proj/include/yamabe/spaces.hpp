#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace yamabe {

inline constexpr double pi = std::numbers::pi;
inline constexpr double pi_half = std::numbers::pi / 2.0;

enum class Family { CP, HP };

inline std::string to_string(Family f) { return f == Family::CP ? "cp" : "hp"; }

/// Which projective-space family we work on and everything its geometry
/// induces for the reduced one-variable problem: real dimension, drift
/// coefficients, invariant Laplace eigenvalue gaps, orbit-volume weight
/// exponents and the critical Sobolev exponent.
struct SpaceSpec {
    Family family = Family::CP;
    int n = 1;
};

inline SpaceSpec make_space(Family family, int n) {
    if (n < 1) throw std::invalid_argument("space: n must be >= 1, got " + std::to_string(n));
    return SpaceSpec{family, n};
}

inline int real_dimension(const SpaceSpec& s) {
    return s.family == Family::CP ? 2 * s.n : 4 * s.n;
}

// Numerator of the drift is a*cos^2(r) - b.
struct DriftConstants {
    double a;
    double b;
};

inline DriftConstants drift_constants(const SpaceSpec& s) {
    if (s.family == Family::CP) return {2.0 * s.n, 1.0};
    return {4.0 * s.n + 2.0, 3.0};
}

/// k-th invariant eigenvalue gap of the Laplacian: 4k(k+n) on CP^n,
/// 4k(k+2n+1) on HP^n. Strictly increasing in k, gap(0) = 0.
inline double gap(const SpaceSpec& s, int k) {
    if (k < 0) throw std::invalid_argument("gap: k must be >= 0");
    const double kk = k;
    return s.family == Family::CP ? 4.0 * kk * (kk + s.n) : 4.0 * kk * (kk + 2.0 * s.n + 1.0);
}

/// Critical Sobolev exponent 2d/(d-2); +infinity in dimension 2 (CP^1),
/// where every exponent is subcritical.
inline double critical_exponent(const SpaceSpec& s) {
    const int d = real_dimension(s);
    if (d <= 2) return std::numeric_limits<double>::infinity();
    return 2.0 * d / (d - 2.0);
}

// Orbit-volume density is sin^sin_exp(r) * cos^cos_exp(r).
struct WeightExponents {
    int sin_exp;
    int cos_exp;
};

inline WeightExponents weight_exponents(const SpaceSpec& s) {
    if (s.family == Family::CP) return {2 * s.n - 1, 1};
    return {4 * s.n - 1, 3};
}

/// First-order coefficient of the reduced equation,
/// (a cos^2 r - b) / (cos r sin r). Positive near 0, one sign change,
/// negative near pi/2; blows up like (a-b)/r and -b/(pi/2 - r) at the ends.
inline double drift(const SpaceSpec& s, double r) {
    if (!(r > 0.0) || !(r < pi_half))
        throw std::domain_error("drift: r must lie strictly inside (0, pi/2)");
    const auto [a, b] = drift_constants(s);
    const double c = std::cos(r);
    const double sn = std::sin(r);
    return (a * c * c - b) / (c * sn);
}

inline double volume_weight(const SpaceSpec& s, double r) {
    if (!(r >= 0.0) || !(r <= pi_half))
        throw std::domain_error("volume_weight: r must lie in [0, pi/2]");
    const auto [se, ce] = weight_exponents(s);
    return std::pow(std::sin(r), se) * std::pow(std::cos(r), ce);
}

/// A fully posed subcritical problem: space, exponent q in (2, p_d),
/// parameter lambda >= 0. The unknown is w = u - 1, so the trivial
/// positive solution u == 1 is w == 0.
struct ProblemSpec {
    SpaceSpec space;
    double q = 3.0;
    double lambda = 0.0;
};

inline ProblemSpec make_problem(const SpaceSpec& space, double q, double lambda) {
    const double p = critical_exponent(space);
    if (!(q > 2.0) || !(q < p))
        throw std::invalid_argument("problem: q must satisfy 2 < q < " + std::to_string(p) +
                                    " for " + to_string(space.family) + " n=" + std::to_string(space.n) +
                                    ", got q=" + std::to_string(q));
    if (!(lambda >= 0.0))
        throw std::invalid_argument("problem: lambda must be >= 0, got " + std::to_string(lambda));
    return ProblemSpec{space, q, lambda};
}

/// Right-hand side of w'' + drift * w' = G(w):
/// G(w) = lambda * ((w+1) - (w+1)^(q-1)). Has the sign of -w for w > -1.
inline double nonlinearity(const ProblemSpec& p, double w) {
    if (!(w > -1.0)) throw std::domain_error("nonlinearity: w must exceed -1 (positivity of u = w + 1)");
    const double u = w + 1.0;
    return p.lambda * (u - std::pow(u, p.q - 1.0));
}

/// G'(w) = lambda * (1 - (q-1)(w+1)^(q-2)); the coefficient of the
/// linearized equation at a solution w.
inline double nonlinearity_derivative(const ProblemSpec& p, double w) {
    if (!(w > -1.0)) throw std::domain_error("nonlinearity_derivative: w must exceed -1");
    return p.lambda * (1.0 - (p.q - 1.0) * std::pow(w + 1.0, p.q - 2.0));
}

/// lambda_k = gap(k)/(q-2), the parameter values where nontrivial branches
/// meet the trivial one.
inline double bifurcation_eigenvalue(const SpaceSpec& s, double q, int k) {
    if (!(q > 2.0)) throw std::invalid_argument("bifurcation_eigenvalue: q must be > 2, got " + std::to_string(q));
    return gap(s, k) / (q - 2.0);
}

/// max{k >= 0 : lambda > lambda_k}; the guaranteed number of nonconstant
/// invariant solutions at this lambda.
inline int solution_count_bound(const SpaceSpec& s, double q, double lambda) {
    int k = 0;
    while (bifurcation_eigenvalue(s, q, k + 1) < lambda) ++k;
    return k;
}

}  // namespace yamabe
