#pragma once

#include <loopform/lie.hpp>
#include <loopform/rational.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace loopform {

/// Scalar Laurent polynomial over a commutative ring R, sparse in the
/// exponent. Zero coefficients never appear in the map.
template <class R>
class ScalarLaurent {
public:
    using Coeffs = std::map<int, R>;

    ScalarLaurent() = default;
    static ScalarLaurent monomial(int exp, R c) {
        ScalarLaurent s;
        s.set(exp, std::move(c));
        return s;
    }
    static ScalarLaurent one() { return monomial(0, R(1)); }

    const Coeffs& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    R coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? R(0) : it->second;
    }

    void set(int exp, R v) {
        if (v == 0)
            c_.erase(exp);
        else
            c_[exp] = std::move(v);
    }
    void add(int exp, const R& v) { set(exp, coeff(exp) + v); }

    ScalarLaurent operator+(const ScalarLaurent& o) const {
        ScalarLaurent r = *this;
        for (const auto& [e, v] : o.c_)
            r.add(e, v);
        return r;
    }
    ScalarLaurent operator-(const ScalarLaurent& o) const {
        ScalarLaurent r = *this;
        for (const auto& [e, v] : o.c_)
            r.add(e, -v);
        return r;
    }
    ScalarLaurent operator*(const ScalarLaurent& o) const {
        ScalarLaurent r;
        for (const auto& [e1, v1] : c_)
            for (const auto& [e2, v2] : o.c_)
                r.add(e1 + e2, v1 * v2);
        return r;
    }
    ScalarLaurent operator*(const R& s) const {
        ScalarLaurent r;
        for (const auto& [e, v] : c_)
            r.add(e, v * s);
        return r;
    }

    /// Termwise derivative d/dt.
    ScalarLaurent derivative() const {
        ScalarLaurent r;
        for (const auto& [e, v] : c_)
            r.add(e - 1, v * R(e));
        return r;
    }

    bool operator==(const ScalarLaurent& o) const = default;

private:
    Coeffs c_;
};

/// Square matrix of scalar Laurent polynomials; models both loop-group
/// elements (det = 1) and matrix-valued coefficient data.
template <class R>
class MatrixLaurent {
public:
    MatrixLaurent() = default;
    explicit MatrixLaurent(int n) : n_(n), e_(std::size_t(n) * n) {}

    static MatrixLaurent identity(int n) {
        MatrixLaurent m(n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = ScalarLaurent<R>::one();
        return m;
    }
    /// diag(t^{a_1}, ..., t^{a_n}).
    static MatrixLaurent torus(const std::vector<int>& exps) {
        MatrixLaurent m(int(exps.size()));
        for (int i = 0; i < m.n(); ++i)
            m.at(i, i) = ScalarLaurent<R>::monomial(exps[i], R(1));
        return m;
    }

    int n() const { return n_; }
    ScalarLaurent<R>& at(int i, int j) { return e_[std::size_t(i) * n_ + j]; }
    const ScalarLaurent<R>& at(int i, int j) const { return e_[std::size_t(i) * n_ + j]; }

    MatrixLaurent operator+(const MatrixLaurent& o) const {
        check_size(o);
        MatrixLaurent r(n_);
        for (std::size_t k = 0; k < e_.size(); ++k)
            r.e_[k] = e_[k] + o.e_[k];
        return r;
    }
    MatrixLaurent operator-(const MatrixLaurent& o) const {
        check_size(o);
        MatrixLaurent r(n_);
        for (std::size_t k = 0; k < e_.size(); ++k)
            r.e_[k] = e_[k] - o.e_[k];
        return r;
    }
    MatrixLaurent operator*(const MatrixLaurent& o) const {
        check_size(o);
        MatrixLaurent r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                if (at(i, k).is_zero())
                    continue;
                for (int j = 0; j < n_; ++j)
                    r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        return r;
    }
    MatrixLaurent operator*(const R& s) const {
        MatrixLaurent r(n_);
        for (std::size_t k = 0; k < e_.size(); ++k)
            r.e_[k] = e_[k] * s;
        return r;
    }

    MatrixLaurent derivative() const {
        MatrixLaurent r(n_);
        for (std::size_t k = 0; k < e_.size(); ++k)
            r.e_[k] = e_[k].derivative();
        return r;
    }

    ScalarLaurent<R> trace() const {
        ScalarLaurent<R> t;
        for (int i = 0; i < n_; ++i)
            t = t + at(i, i);
        return t;
    }

    ScalarLaurent<R> determinant() const {
        // Cofactor expansion; matrices here are tiny (n <= 3 in practice).
        if (n_ == 1)
            return at(0, 0);
        ScalarLaurent<R> d;
        for (int j = 0; j < n_; ++j) {
            if (at(0, j).is_zero())
                continue;
            auto m = minor_matrix(0, j).determinant();
            if (j % 2 == 1)
                m = m * R(-1);
            d = d + at(0, j) * m;
        }
        return d;
    }

    bool is_unimodular() const { return determinant() == ScalarLaurent<R>::one(); }

    /// Inverse via the adjugate; only valid when det = 1.
    MatrixLaurent unimodular_inverse() const {
        if (!is_unimodular())
            throw std::invalid_argument("matrix Laurent polynomial is not unimodular");
        MatrixLaurent adj(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                auto m = minor_matrix(i, j).determinant();
                if ((i + j) % 2 == 1)
                    m = m * R(-1);
                adj.at(j, i) = m;
            }
        return adj;
    }

    bool operator==(const MatrixLaurent& o) const = default;

private:
    void check_size(const MatrixLaurent& o) const {
        if (n_ != o.n_)
            throw std::invalid_argument("matrix Laurent size mismatch");
    }
    MatrixLaurent minor_matrix(int di, int dj) const {
        MatrixLaurent m(n_ - 1);
        for (int i = 0, r = 0; i < n_; ++i) {
            if (i == di)
                continue;
            for (int j = 0, c = 0; j < n_; ++j) {
                if (j == dj)
                    continue;
                m.at(r, c) = at(i, j);
                ++c;
            }
            ++r;
        }
        return m;
    }

    int n_ = 0;
    std::vector<ScalarLaurent<R>> e_;
};

/// Lie-algebra-valued Laurent polynomial. `differential` distinguishes
/// g((t)) from g((t))dt so the residue pairing keeps a symmetric
/// signature.
class GLaurent {
public:
    GLaurent() = default;
    GLaurent(const LieAlgebra* alg, bool differential)
        : alg_(alg), differential_(differential) {}

    static GLaurent term(const LieAlgebra* alg, bool differential, int exp,
                         const GElement& coeff);

    const LieAlgebra* algebra() const { return alg_; }
    bool is_differential() const { return differential_; }
    const std::map<int, GElement>& coeffs() const { return c_; }

    GElement coeff(int exp) const;
    void add_term(int exp, const GElement& v);

    GLaurent operator+(const GLaurent& o) const;
    GLaurent operator-(const GLaurent& o) const;
    GLaurent operator*(const Rat& s) const;

    bool operator==(const GLaurent& o) const;

    std::string to_string() const;

private:
    const LieAlgebra* alg_ = nullptr;
    bool differential_ = false;
    std::map<int, GElement> c_;
};

/// Coefficient of t^{-1} dt; only defined on differential-side values.
GElement residue(const GLaurent& x);

/// Cauchy product with a scalar Laurent polynomial.
GLaurent mul_scalar(const ScalarLaurent<Rat>& f, const GLaurent& x);

/// Formal exterior derivative g((t)) -> g((t))dt.
GLaurent d(const GLaurent& x);

/// alpha x alpha^{-1} for unimodular alpha, coefficientwise in t.
GLaurent loop_conjugate(const MatrixLaurent<Rat>& alpha, const GLaurent& x);

MatrixLaurent<Rat> to_matrix_laurent(const GLaurent& x);
GLaurent from_matrix_laurent(const LieAlgebra* alg, bool differential,
                             const MatrixLaurent<Rat>& m);

}  // namespace loopform
