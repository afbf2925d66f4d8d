#include <loopform/matrix.hpp>

#include <stdexcept>

namespace loopform {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty())
        return Matrix(0, 0);
    Matrix m(int(rows.size()), int(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw std::invalid_argument("ragged row list");
        for (int j = 0; j < m.cols(); ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rat> Matrix::row(int i) const {
    std::vector<Rat> v(cols_);
    for (int j = 0; j < cols_; ++j)
        v[j] = at(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in +");
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k)
        r.a_[k] = a_[k] + o.a_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in -");
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k)
        r.a_[k] = a_[k] - o.a_[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix shape mismatch in *");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0)
                continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator*(const Rat& s) const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k)
        r.a_[k] = a_[k] * s;
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0)
            return false;
    return true;
}

Matrix Matrix::stacked(const Matrix& o) const {
    if (rows_ == 0 && cols_ == 0)
        return o;
    if (o.rows_ == 0 && o.cols_ == 0)
        return *this;
    if (cols_ != o.cols_)
        throw std::invalid_argument("column mismatch in stacked");
    Matrix r(rows_ + o.rows_, cols_);
    r.a_ = a_;
    r.a_.insert(r.a_.end(), o.a_.begin(), o.a_.end());
    return r;
}

std::vector<Rat> mat_vec(const Matrix& m, const std::vector<Rat>& v) {
    if (int(v.size()) != m.cols())
        throw std::invalid_argument("vector length mismatch in mat_vec");
    std::vector<Rat> r(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0)
                r[i] += m.at(i, j) * v[j];
    return r;
}

std::vector<Rat> vec_mat(const std::vector<Rat>& v, const Matrix& m) {
    if (int(v.size()) != m.rows())
        throw std::invalid_argument("vector length mismatch in vec_mat");
    std::vector<Rat> r(m.cols());
    for (int i = 0; i < m.rows(); ++i)
        if (v[i] != 0)
            for (int j = 0; j < m.cols(); ++j)
                r[j] += v[i] * m.at(i, j);
    return r;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector length mismatch in dot");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

std::pair<Matrix, std::vector<int>> rref(Matrix m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m.at(p, j), m.at(r, j));
        Rat inv = Rat(1) / m.at(r, c);
        for (int j = c; j < m.cols(); ++j)
            m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0)
                continue;
            Rat f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

int rank(const Matrix& m) {
    return int(rref(m).second.size());
}

Rat det(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("det of non-square matrix");
    Matrix w = m;
    int n = w.rows();
    Rat d = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (w.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0)
            return 0;
        if (p != c) {
            for (int j = 0; j < n; ++j)
                std::swap(w.at(p, j), w.at(c, j));
            d = -d;
        }
        d *= w.at(c, c);
        Rat inv = Rat(1) / w.at(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (w.at(i, c) == 0)
                continue;
            Rat f = w.at(i, c) * inv;
            for (int j = c; j < n; ++j)
                w.at(i, j) -= f * w.at(c, j);
        }
    }
    return d;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto [red, piv] = rref(std::move(aug));
    if (int(piv.size()) != n || piv.back() != n - 1)
        throw std::invalid_argument("singular matrix");
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.at(i, j) = red.at(i, n + j);
    return inv;
}

Matrix kernel(const Matrix& m) {
    auto [red, piv] = rref(m);
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : piv)
        is_pivot[c] = true;
    Matrix basis(n - int(piv.size()), n);
    int row = 0;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c])
            continue;
        basis.at(row, c) = 1;
        for (std::size_t r = 0; r < piv.size(); ++r)
            basis.at(row, piv[r]) = -red.at(int(r), c);
        ++row;
    }
    return rref(std::move(basis)).first;
}

Subspace Subspace::span(int ambient, const Matrix& rows) {
    if (rows.rows() > 0 && rows.cols() != ambient)
        throw std::invalid_argument("basis width differs from ambient dimension");
    auto [red, piv] = rref(rows);
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(int(piv.size()), ambient);
    for (int i = 0; i < s.basis_.rows(); ++i)
        for (int j = 0; j < ambient; ++j)
            s.basis_.at(i, j) = red.at(i, j);
    return s;
}

bool Subspace::contains(const std::vector<Rat>& v) const {
    if (int(v.size()) != ambient_)
        throw std::invalid_argument("vector length differs from ambient dimension");
    // Reduce v against the RREF basis.
    std::vector<Rat> w = v;
    auto [red, piv] = rref(basis_);
    for (std::size_t r = 0; r < piv.size(); ++r) {
        Rat f = w[piv[r]];
        if (f == 0)
            continue;
        for (int j = 0; j < ambient_; ++j)
            w[j] -= f * red.at(int(r), j);
    }
    for (const auto& x : w)
        if (x != 0)
            return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis().row(i)))
            return false;
    return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("ambient mismatch in subspace_sum");
    return Subspace::span(a.ambient_dim(), a.basis().stacked(b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("ambient mismatch in subspace_intersect");
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace::zero(a.ambient_dim());
    // Solve lambda * A = mu * B: kernel of [A^T | -B^T].
    Matrix at = a.basis().transpose();
    Matrix bt = b.basis().transpose() * Rat(-1);
    Matrix sys(a.ambient_dim(), a.dim() + b.dim());
    for (int i = 0; i < a.ambient_dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j)
            sys.at(i, j) = at.at(i, j);
        for (int j = 0; j < b.dim(); ++j)
            sys.at(i, a.dim() + j) = bt.at(i, j);
    }
    Matrix ker = kernel(sys);
    Matrix rows(ker.rows(), a.ambient_dim());
    for (int i = 0; i < ker.rows(); ++i) {
        std::vector<Rat> lambda(ker.cols());
        for (int j = 0; j < a.dim(); ++j)
            lambda[j] = ker.at(i, j);
        lambda.resize(a.dim());
        auto v = vec_mat(lambda, a.basis());
        for (int j = 0; j < a.ambient_dim(); ++j)
            rows.at(i, j) = v[j];
    }
    return Subspace::span(a.ambient_dim(), rows);
}

Subspace annihilator(const Matrix& pairing, const Subspace& s) {
    if (pairing.rows() != s.ambient_dim())
        throw std::invalid_argument("pairing rows differ from ambient of subspace");
    if (s.dim() == 0)
        return Subspace::full(pairing.cols());
    return Subspace::span(pairing.cols(), kernel(s.basis() * pairing));
}

}  // namespace loopform
