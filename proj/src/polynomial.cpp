#include "yamabe/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace yamabe {

namespace {
const Rational kZero{0};
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::constant(const Rational& c) {
    return RationalPoly{std::vector<Rational>{c}};
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RationalPoly::coeff(int m) const {
    if (m < 0 || m >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[m];
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RationalPoly::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->convert_to<double>();
    return acc;
}

RationalPoly RationalPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t m = 1; m < coeffs_.size(); ++m) d[m - 1] = coeffs_[m] * static_cast<int>(m);
    return RationalPoly{std::move(d)};
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t m = 0; m < rhs.coeffs_.size(); ++m) coeffs_[m] += rhs.coeffs_[m];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t m = 0; m < rhs.coeffs_.size(); ++m) coeffs_[m] -= rhs.coeffs_[m];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

std::string RationalPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int m = degree(); m >= 0; --m) {
        const Rational& c = coeff(m);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        const Rational mag = abs(c);
        if (mag != 1 || m == 0) os << mag.str();
        if (m >= 1) {
            if (mag != 1) os << "*";
            os << "x";
            if (m > 1) os << "^" << m;
        }
        first = false;
    }
    return os.str();
}

RationalPoly multiply(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.degree() + b.degree() + 1, Rational{0});
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j) out[i + j] += a.coeff(i) * b.coeff(j);
    return RationalPoly{std::move(out)};
}

RationalPoly remainder(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial remainder: division by zero polynomial");
    std::vector<Rational> r(a.coeffs());
    const int db = b.degree();
    const Rational& lead = b.coeff(db);
    while (static_cast<int>(r.size()) - 1 >= db) {
        const Rational q = r.back() / lead;
        const int shift = static_cast<int>(r.size()) - 1 - db;
        for (int m = 0; m <= db; ++m) r[m + shift] -= q * b.coeff(m);
        // the leading term cancels exactly
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.empty()) break;
    }
    return RationalPoly{std::move(r)};
}

namespace {

RationalPoly make_monic(const RationalPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rational{1} / p.coeff(p.degree()));
}

}  // namespace

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly x = a, y = b;
    while (!y.is_zero()) {
        RationalPoly r = remainder(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(x);
}

bool all_roots_simple(const RationalPoly& p) {
    if (p.degree() <= 1) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

namespace {

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int sign_variations(const std::vector<RationalPoly>& chain, const Rational& x) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        const int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

int count_roots_open(const RationalPoly& p, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::invalid_argument("count_roots_open: need lo < hi");
    if (p.is_zero()) throw std::invalid_argument("count_roots_open: zero polynomial");
    if (p.degree() == 0) return 0;

    // Shift roots at the interval ends out of the way: divide out (x - lo)
    // and (x - hi) factors so the Sturm endpoint evaluations are nonzero.
    RationalPoly q = p;
    auto divide_out_root = [&q](const Rational& root) {
        while (!q.is_zero() && q.degree() >= 1 && q.eval(root) == 0) {
            // synthetic division by (x - root)
            std::vector<Rational> out(q.degree());
            Rational carry = 0;
            for (int m = q.degree(); m >= 1; --m) {
                carry = q.coeff(m) + carry * root;
                out[m - 1] = carry;
            }
            q = RationalPoly{std::move(out)};
        }
    };
    divide_out_root(lo);
    divide_out_root(hi);
    if (q.degree() <= 0) return 0;

    std::vector<RationalPoly> chain{q, q.derivative()};
    while (!chain.back().is_zero()) {
        RationalPoly next = -remainder(chain[chain.size() - 2], chain.back());
        chain.push_back(std::move(next));
    }
    chain.pop_back();

    // Sturm: V(lo) - V(hi) counts distinct roots in (lo, hi]; hi-roots were
    // divided out above, so this is the open-interval count.
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace yamabe
