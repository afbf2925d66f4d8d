#include <loopform/lie.hpp>

#include <stdexcept>

namespace loopform {

namespace {

Matrix elementary(int n, int i, int j) {
    Matrix m(n, n);
    m.at(i, j) = 1;
    return m;
}

Rat trace_of(const Matrix& m) {
    Rat t = 0;
    for (int i = 0; i < m.rows(); ++i)
        t += m.at(i, i);
    return t;
}

std::vector<Rat> flatten(const Matrix& m) {
    std::vector<Rat> v;
    v.reserve(std::size_t(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            v.push_back(m.at(i, j));
    return v;
}

}  // namespace

LieAlgebra LieAlgebra::sl(int n) {
    if (n < 2)
        throw std::invalid_argument("sl(n) needs n >= 2");
    LieAlgebra g;
    g.n_ = n;
    g.dim_ = n * n - 1;
    // Basis: E_ij for i != j, then the Cartan elements E_ii - E_{i+1,i+1}.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                g.basis_.push_back(elementary(n, i, j));
    for (int i = 0; i + 1 < n; ++i)
        g.basis_.push_back(elementary(n, i, i) - elementary(n, i + 1, i + 1));

    // Coordinate solver: left inverse of the basis-column matrix.
    Matrix cols(n * n, g.dim_);
    for (int k = 0; k < g.dim_; ++k) {
        auto f = flatten(g.basis_[k]);
        for (int r = 0; r < n * n; ++r)
            cols.at(r, k) = f[r];
    }
    g.coord_solver_ = inverse(cols.transpose() * cols) * cols.transpose();

    g.killing_gram_ = Matrix(g.dim_, g.dim_);
    for (int i = 0; i < g.dim_; ++i)
        for (int j = 0; j < g.dim_; ++j)
            g.killing_gram_.at(i, j) = trace_of(g.basis_[i] * g.basis_[j]);

    g.structure_.assign(std::size_t(g.dim_) * g.dim_ * g.dim_, Rat(0));
    for (int i = 0; i < g.dim_; ++i)
        for (int j = 0; j < g.dim_; ++j) {
            Matrix c = g.basis_[i] * g.basis_[j] - g.basis_[j] * g.basis_[i];
            auto coords = mat_vec(g.coord_solver_, flatten(c));
            for (int k = 0; k < g.dim_; ++k)
                g.structure_[(std::size_t(i) * g.dim_ + j) * g.dim_ + k] = coords[k];
        }
    return g;
}

Matrix LieAlgebra::matrix_of(const GElement& x) const {
    if (int(x.size()) != dim_)
        throw std::invalid_argument("coordinate length differs from algebra dimension");
    Matrix m(n_, n_);
    for (int k = 0; k < dim_; ++k)
        if (x[k] != 0)
            m = m + basis_[k] * x[k];
    return m;
}

GElement LieAlgebra::coords_of(const Matrix& m) const {
    if (m.rows() != n_ || m.cols() != n_)
        throw std::invalid_argument("matrix size differs from algebra rank");
    if (trace_of(m) != 0)
        throw std::invalid_argument("matrix is not trace-free");
    return mat_vec(coord_solver_, flatten(m));
}

Rat LieAlgebra::killing(const GElement& a, const GElement& b) const {
    if (int(a.size()) != dim_ || int(b.size()) != dim_)
        throw std::invalid_argument("coordinate length differs from algebra dimension");
    Rat s = 0;
    for (int i = 0; i < dim_; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < dim_; ++j)
            if (b[j] != 0)
                s += a[i] * killing_gram_.at(i, j) * b[j];
    }
    return s;
}

GElement LieAlgebra::bracket(const GElement& a, const GElement& b) const {
    if (int(a.size()) != dim_ || int(b.size()) != dim_)
        throw std::invalid_argument("coordinate length differs from algebra dimension");
    GElement c(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < dim_; ++j) {
            if (b[j] == 0)
                continue;
            for (int k = 0; k < dim_; ++k) {
                const Rat& s = structure(i, j, k);
                if (s != 0)
                    c[k] += a[i] * b[j] * s;
            }
        }
    }
    return c;
}

GElement LieAlgebra::ad_conjugate(const Matrix& g, const GElement& x) const {
    if (det(g) == 0)
        throw std::invalid_argument("ad_conjugate by singular matrix");
    return coords_of(g * matrix_of(x) * inverse(g));
}

}  // namespace loopform
