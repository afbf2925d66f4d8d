#pragma once

#include <loopform/rational.hpp>

#include <map>
#include <utility>
#include <vector>

namespace loopform {

/// Dense univariate polynomial over Q; c[i] is the coefficient of x^i.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(Rat v) { return Poly({std::move(v)}); }
    static Poly monomial(int deg, Rat v);
    /// x - q
    static Poly linear_root(const Rat& q) { return Poly({-q, Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }  // -1 for the zero poly
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const { return i >= 0 && i < int(c_.size()) ? c_[i] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    bool operator==(const Poly& o) const = default;

    Rat eval(const Rat& x) const;

    /// p(x + q): Taylor shift.
    Poly shifted(const Rat& q) const;

    /// Coefficients reversed: x^deg * p(1/x).
    Poly reversed() const;

    Poly derivative() const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divrem(const Poly& divisor) const;

    /// Multiplicity of q as a root.
    int root_multiplicity(const Rat& q) const;

private:
    void trim();
    std::vector<Rat> c_;
};

Poly poly_gcd(Poly a, Poly b);  // monic gcd
Poly poly_pow(const Poly& p, int e);

/// Rational function num/den over Q, gcd-reduced with monic denominator.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::constant(1)) {}
    RatFunc(Poly num, Poly den);
    static RatFunc constant(Rat v) { return RatFunc(Poly::constant(std::move(v)), Poly::constant(1)); }
    static RatFunc monomial(int deg, Rat v) {
        return RatFunc(Poly::monomial(deg, std::move(v)), Poly::constant(1));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator*(const Rat& s) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const = default;

    /// Pole order at the finite point q (0 when regular there).
    int pole_order_at(const Rat& q) const;
    /// Pole order at infinity: deg num - deg den (<= 0 when regular).
    int pole_order_at_infinity() const;

    /// Laurent expansion in xi = x - q, exponents up to max_exp inclusive.
    std::map<int, Rat> expand_at(const Rat& q, int max_exp) const;
    /// Laurent expansion in t = 1/x at infinity, exponents up to max_exp.
    std::map<int, Rat> expand_at_infinity(int max_exp) const;

    /// If the denominator is c * x^k, returns the Laurent-polynomial
    /// coefficients in x; otherwise returns false.
    bool as_laurent(std::map<int, Rat>& out) const;

private:
    Poly num_, den_;
};

/// Truncated product of two Laurent series segments (used by the jet
/// solver); keeps exponents in [lo, hi].
std::map<int, Rat> series_mul(const std::map<int, Rat>& a, const std::map<int, Rat>& b,
                              int lo, int hi);

/// Multiplicative inverse of a Laurent series segment with nonzero
/// leading term, up to `terms` coefficients.
std::map<int, Rat> series_inverse(const std::map<int, Rat>& a, int terms);

}  // namespace loopform
