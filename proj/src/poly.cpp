#include <loopform/poly.hpp>

#include <stdexcept>

namespace loopform {

Poly Poly::monomial(int deg, Rat v) {
    if (deg < 0)
        throw std::invalid_argument("negative degree monomial");
    if (v == 0)
        return Poly();
    std::vector<Rat> c(deg + 1);
    c[deg] = std::move(v);
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = coeff(int(i)) + o.coeff(int(i));
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = coeff(int(i)) - o.coeff(int(i));
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero())
        return Poly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rat& s) const {
    std::vector<Rat> c = c_;
    for (auto& x : c)
        x *= s;
    return Poly(std::move(c));
}

Rat Poly::eval(const Rat& x) const {
    Rat v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        v = v * x + *it;
    return v;
}

Poly Poly::shifted(const Rat& q) const {
    // Horner form of p(x + q).
    Poly r;
    Poly xq({q, Rat(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * xq + Poly::constant(*it);
    return r;
}

Poly Poly::reversed() const {
    std::vector<Rat> c(c_.rbegin(), c_.rend());
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1)
        return Poly();
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = c_[i] * Rat(int(i));
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& divisor) const {
    if (divisor.is_zero())
        throw std::domain_error("division by zero polynomial");
    Poly rem = *this;
    if (rem.degree() < divisor.degree())
        return {Poly(), rem};
    std::vector<Rat> q(rem.degree() - divisor.degree() + 1);
    Rat lead_inv = Rat(1) / divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rat f = rem.leading() * lead_inv;
        q[shift] = f;
        rem = rem - divisor * Poly::monomial(shift, f);
    }
    return {Poly(std::move(q)), rem};
}

int Poly::root_multiplicity(const Rat& q) const {
    if (is_zero())
        throw std::domain_error("root multiplicity of the zero polynomial");
    int mult = 0;
    Poly p = *this;
    Poly root = Poly::linear_root(q);
    while (p.eval(q) == 0) {
        auto [quot, rem] = p.divrem(root);
        p = quot;
        ++mult;
    }
    return mult;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero())
        a = a * (Rat(1) / a.leading());
    return a;
}

Poly poly_pow(const Poly& p, int e) {
    if (e < 0)
        throw std::invalid_argument("negative polynomial power");
    Poly r = Poly::constant(1);
    for (int i = 0; i < e; ++i)
        r = r * p;
    return r;
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::domain_error("zero denominator rational function");
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    Rat lead = den_.leading();
    if (lead != 1) {
        Rat inv = Rat(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}
RatFunc RatFunc::operator*(const Rat& s) const {
    return RatFunc(num_ * s, den_);
}
RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero())
        throw std::domain_error("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

int RatFunc::pole_order_at(const Rat& q) const {
    if (is_zero())
        return 0;
    return den_.root_multiplicity(q);
}

int RatFunc::pole_order_at_infinity() const {
    if (is_zero())
        return 0;
    return num_.degree() - den_.degree();
}

std::map<int, Rat> RatFunc::expand_at(const Rat& q, int max_exp) const {
    std::map<int, Rat> out;
    if (is_zero())
        return out;
    Poly n = num_.shifted(q);  // now in xi with xi = x - q
    Poly dpoly = den_.shifted(q);
    // Strip xi-powers to expose unit parts.
    int vn = 0, vd = 0;
    while (n.coeff(vn) == 0)
        ++vn;
    while (dpoly.coeff(vd) == 0)
        ++vd;
    int val = vn - vd;
    if (val > max_exp)
        return out;
    int terms = max_exp - val + 1;
    std::map<int, Rat> dunit;
    for (int i = 0; i < terms; ++i)
        if (dpoly.coeff(vd + i) != 0)
            dunit[i] = dpoly.coeff(vd + i);
    auto dinv = series_inverse(dunit, terms);
    std::map<int, Rat> nseg;
    for (int i = 0; i < terms; ++i)
        if (n.coeff(vn + i) != 0)
            nseg[i] = n.coeff(vn + i);
    auto prod = series_mul(nseg, dinv, 0, terms - 1);
    for (const auto& [e, v] : prod)
        if (v != 0)
            out[e + val] = v;
    return out;
}

std::map<int, Rat> RatFunc::expand_at_infinity(int max_exp) const {
    std::map<int, Rat> out;
    if (is_zero())
        return out;
    // f(1/t) = t^{deg den - deg num} * rev(num)(t) / rev(den)(t).
    int val = den_.degree() - num_.degree();
    if (val > max_exp)
        return out;
    Poly rn = num_.reversed();
    Poly rd = den_.reversed();
    int terms = max_exp - val + 1;
    std::map<int, Rat> dseg, nseg;
    for (int i = 0; i <= rd.degree() && i < terms; ++i)
        if (rd.coeff(i) != 0)
            dseg[i] = rd.coeff(i);
    for (int i = 0; i <= rn.degree() && i < terms; ++i)
        if (rn.coeff(i) != 0)
            nseg[i] = rn.coeff(i);
    auto dinv = series_inverse(dseg, terms);
    auto prod = series_mul(nseg, dinv, 0, terms - 1);
    for (const auto& [e, v] : prod)
        if (v != 0)
            out[e + val] = v;
    return out;
}

bool RatFunc::as_laurent(std::map<int, Rat>& out) const {
    out.clear();
    if (is_zero())
        return true;
    int k = den_.degree();
    for (int i = 0; i < k; ++i)
        if (den_.coeff(i) != 0)
            return false;
    if (den_.coeff(k) != 1)
        return false;  // denominator is monic by construction
    for (int i = 0; i <= num_.degree(); ++i)
        if (num_.coeff(i) != 0)
            out[i - k] = num_.coeff(i);
    return true;
}

std::map<int, Rat> series_mul(const std::map<int, Rat>& a, const std::map<int, Rat>& b,
                              int lo, int hi) {
    std::map<int, Rat> r;
    for (const auto& [ea, va] : a)
        for (const auto& [eb, vb] : b) {
            int e = ea + eb;
            if (e < lo || e > hi)
                continue;
            r[e] += va * vb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

std::map<int, Rat> series_inverse(const std::map<int, Rat>& a, int terms) {
    auto lead = a.find(0);
    if (lead == a.end() || lead->second == 0)
        throw std::domain_error("series inverse needs a unit constant term");
    std::vector<Rat> inv(terms);
    Rat c0 = Rat(1) / lead->second;
    inv[0] = c0;
    for (int n = 1; n < terms; ++n) {
        Rat s = 0;
        for (const auto& [e, v] : a) {
            if (e <= 0 || e > n)
                continue;
            s += v * inv[n - e];
        }
        inv[n] = -s * c0;
    }
    std::map<int, Rat> out;
    for (int i = 0; i < terms; ++i)
        if (inv[i] != 0)
            out[i] = inv[i];
    return out;
}

}  // namespace loopform
