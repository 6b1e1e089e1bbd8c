#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace yamabe {

/// Exact arbitrary-precision rational scalar. All spectral constructions
/// and root counts are done in this type; floating point enters only at
/// evaluation time.
using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial with exact rational coefficients, stored
/// ascending (coeffs[m] multiplies x^m). The zero polynomial has an empty
/// coefficient vector and degree -1.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);

    static RationalPoly constant(const Rational& c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^m (zero beyond the degree).
    const Rational& coeff(int m) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;
    double eval_double(double x) const;

    RationalPoly derivative() const;

    RationalPoly operator-() const;
    RationalPoly& operator+=(const RationalPoly& rhs);
    RationalPoly& operator-=(const RationalPoly& rhs);
    RationalPoly& operator*=(const Rational& c);

    friend RationalPoly operator+(RationalPoly lhs, const RationalPoly& rhs) { return lhs += rhs; }
    friend RationalPoly operator-(RationalPoly lhs, const RationalPoly& rhs) { return lhs -= rhs; }
    friend RationalPoly operator*(RationalPoly lhs, const Rational& c) { return lhs *= c; }
    friend RationalPoly operator*(const Rational& c, RationalPoly rhs) { return rhs *= c; }
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string str() const;  // e.g. "6*x^2 - 6*x + 1"

private:
    void trim();
    std::vector<Rational> coeffs_;
};

RationalPoly multiply(const RationalPoly& a, const RationalPoly& b);

/// Euclidean remainder of a by b (b nonzero).
RationalPoly remainder(const RationalPoly& a, const RationalPoly& b);

/// Monic gcd; gcd with the zero polynomial is the other argument made monic.
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

bool all_roots_simple(const RationalPoly& p);

/// Number of distinct real roots in the open interval (lo, hi), by an exact
/// Sturm sequence. Roots at the interval ends are excluded.
int count_roots_open(const RationalPoly& p, const Rational& lo, const Rational& hi);

}  // namespace yamabe
