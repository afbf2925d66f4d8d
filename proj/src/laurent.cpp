#include <loopform/laurent.hpp>

#include <sstream>
#include <stdexcept>

namespace loopform {

namespace {

bool all_zero(const GElement& v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

void check_same(const GLaurent& a, const GLaurent& b) {
    if (a.algebra() != b.algebra())
        throw std::invalid_argument("GLaurent algebra mismatch");
    if (a.is_differential() != b.is_differential())
        throw std::invalid_argument("GLaurent function/differential flag mismatch");
}

}  // namespace

GLaurent GLaurent::term(const LieAlgebra* alg, bool differential, int exp,
                        const GElement& coeff) {
    GLaurent x(alg, differential);
    x.add_term(exp, coeff);
    return x;
}

GElement GLaurent::coeff(int exp) const {
    auto it = c_.find(exp);
    if (it != c_.end())
        return it->second;
    return GElement(alg_ ? alg_->dim() : 0, Rat(0));
}

void GLaurent::add_term(int exp, const GElement& v) {
    if (!alg_ || int(v.size()) != alg_->dim())
        throw std::invalid_argument("coefficient length differs from algebra dimension");
    auto it = c_.find(exp);
    if (it == c_.end()) {
        if (!all_zero(v))
            c_[exp] = v;
        return;
    }
    for (int k = 0; k < alg_->dim(); ++k)
        it->second[k] += v[k];
    if (all_zero(it->second))
        c_.erase(it);
}

GLaurent GLaurent::operator+(const GLaurent& o) const {
    check_same(*this, o);
    GLaurent r = *this;
    for (const auto& [e, v] : o.c_)
        r.add_term(e, v);
    return r;
}

GLaurent GLaurent::operator-(const GLaurent& o) const {
    check_same(*this, o);
    GLaurent r = *this;
    for (const auto& [e, v] : o.c_) {
        GElement neg = v;
        for (auto& x : neg)
            x = -x;
        r.add_term(e, neg);
    }
    return r;
}

GLaurent GLaurent::operator*(const Rat& s) const {
    GLaurent r(alg_, differential_);
    if (s == 0)
        return r;
    for (const auto& [e, v] : c_) {
        GElement w = v;
        for (auto& x : w)
            x *= s;
        r.add_term(e, w);
    }
    return r;
}

bool GLaurent::operator==(const GLaurent& o) const {
    return alg_ == o.alg_ && differential_ == o.differential_ && c_ == o.c_;
}

std::string GLaurent::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, v] : c_) {
        for (int k = 0; k < alg_->dim(); ++k) {
            if (v[k] == 0)
                continue;
            if (!first)
                out << " + ";
            first = false;
            out << rat_to_string(v[k]) << "*b" << k << "⊗t^" << e;
        }
    }
    if (first)
        out << "0";
    if (differential_)
        out << " dt";
    return out.str();
}

GElement residue(const GLaurent& x) {
    if (!x.is_differential())
        throw std::invalid_argument("residue of a function-side value");
    return x.coeff(-1);
}

GLaurent mul_scalar(const ScalarLaurent<Rat>& f, const GLaurent& x) {
    GLaurent r(x.algebra(), x.is_differential());
    for (const auto& [ef, cf] : f.coeffs())
        for (const auto& [ex, cx] : x.coeffs()) {
            GElement w = cx;
            for (auto& v : w)
                v *= cf;
            r.add_term(ef + ex, w);
        }
    return r;
}

GLaurent d(const GLaurent& x) {
    if (x.is_differential())
        throw std::invalid_argument("d of a differential-side value");
    GLaurent r(x.algebra(), true);
    for (const auto& [e, v] : x.coeffs()) {
        if (e == 0)
            continue;
        GElement w = v;
        for (auto& c : w)
            c *= e;
        r.add_term(e - 1, w);
    }
    return r;
}

MatrixLaurent<Rat> to_matrix_laurent(const GLaurent& x) {
    const LieAlgebra* g = x.algebra();
    MatrixLaurent<Rat> m(g->n());
    for (const auto& [e, v] : x.coeffs()) {
        Matrix coeff = g->matrix_of(v);
        for (int i = 0; i < g->n(); ++i)
            for (int j = 0; j < g->n(); ++j)
                if (coeff.at(i, j) != 0)
                    m.at(i, j).add(e, coeff.at(i, j));
    }
    return m;
}

GLaurent from_matrix_laurent(const LieAlgebra* alg, bool differential,
                             const MatrixLaurent<Rat>& m) {
    if (m.n() != alg->n())
        throw std::invalid_argument("matrix size differs from algebra rank");
    // Collect the exponent support, then project each matrix coefficient.
    std::map<int, Matrix> by_exp;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            for (const auto& [e, c] : m.at(i, j).coeffs()) {
                auto it = by_exp.find(e);
                if (it == by_exp.end())
                    it = by_exp.emplace(e, Matrix(m.n(), m.n())).first;
                it->second.at(i, j) = c;
            }
    GLaurent r(alg, differential);
    for (const auto& [e, coeff] : by_exp)
        r.add_term(e, alg->coords_of(coeff));
    return r;
}

GLaurent loop_conjugate(const MatrixLaurent<Rat>& alpha, const GLaurent& x) {
    if (!alpha.is_unimodular())
        throw std::invalid_argument("loop_conjugate by non-unimodular matrix");
    auto m = alpha * to_matrix_laurent(x) * alpha.unimodular_inverse();
    return from_matrix_laurent(x.algebra(), x.is_differential(), m);
}

}  // namespace loopform
