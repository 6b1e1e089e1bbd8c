#pragma once

#include "yamabe/polynomial.hpp"
#include "yamabe/spaces.hpp"

namespace yamabe {

/// Exact invariant eigenfunction p_k of the reduced eigenvalue operator,
/// as a degree-k polynomial in x = cos^2(r), normalized so p_k(1) = 1
/// (value 1 at r = 0). Its eigenvalue is gap(space, k).
struct EigenPolynomial {
    SpaceSpec space;
    int k = 0;
    RationalPoly poly;
};

Rational gap_exact(const SpaceSpec& space, int k);

/// Image of poly under the eigenvalue operator with parameter mu, acting in
/// the x = cos^2(r) variable: x^m maps to (mu - gap(m)) x^m + D(m) x^(m-1),
/// with D(m) = 4m^2 on CP and 4m(m+1) on HP. Exact in rational arithmetic;
/// p is an eigenfunction for mu iff the image is the zero polynomial.
RationalPoly apply_L(const SpaceSpec& space, const Rational& mu, const RationalPoly& poly);

/// Builds p_k by back-substitution on the two-term recursion
/// (gap(k) - gap(m)) c_m + D(m+1) c_{m+1} = 0, then rescales so p_k(1) = 1.
/// The denominators gap(k) - gap(m) never vanish since gap is strictly
/// increasing.
EigenPolynomial eigenfunction(const SpaceSpec& space, int k);

struct ZeroCount {
    int count = 0;
    bool all_simple = true;
};

/// Distinct roots of p_k(x) in the open interval (0, 1), counted by an exact
/// Sturm sequence. Each such root corresponds to exactly one r in (0, pi/2)
/// through the decreasing bijection x = cos^2(r).
ZeroCount count_zeros(const EigenPolynomial& p);

/// p_k(cos^2 r) in floating point (Horner).
double evaluate(const EigenPolynomial& p, double r);

}  // namespace yamabe
