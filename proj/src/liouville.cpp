#include <loopform/liouville.hpp>

#include <sstream>
#include <stdexcept>

namespace loopform {

FormMatrix::FormMatrix(FormKind k, Matrix m) : kind(k), entries(std::move(m)) {
    if (entries.rows() != entries.cols())
        throw std::invalid_argument("form matrix must be square");
    Matrix t = entries.transpose();
    if (kind == FormKind::symmetric && !(t == entries))
        throw std::invalid_argument("matrix is not symmetric");
    if (kind == FormKind::alternating && !(entries + t).is_zero())
        throw std::invalid_argument("matrix is not alternating");
}

Rat FormMatrix::apply(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    if (int(a.size()) != dim() || int(b.size()) != dim())
        throw std::invalid_argument("form argument dimension mismatch");
    return dot(vec_mat(a, entries), b);
}

Rat liouville_one(const CotangentPoint& z, const TangentVector& t) {
    if (z.covector.size() != t.u.size())
        throw std::invalid_argument("liouville_one dimension mismatch");
    return dot(z.covector, t.u);
}

Rat liouville_two(const CotangentPoint& z, const TangentVector& t1,
                  const TangentVector& t2) {
    std::size_t n = z.covector.size();
    if (t1.u.size() != n || t2.u.size() != n || t1.v.size() != n || t2.v.size() != n)
        throw std::invalid_argument("liouville_two dimension mismatch");
    return dot(t2.v, t1.u) - dot(t1.v, t2.u);
}

FormMatrix liouville_two_matrix(int half_dim) {
    Matrix m(2 * half_dim, 2 * half_dim);
    for (int i = 0; i < half_dim; ++i) {
        m.at(i, half_dim + i) = 1;  // omega((u1,v1),(u2,v2)) = v2(u1) - v1(u2)
        m.at(half_dim + i, i) = -1;
    }
    return FormMatrix(FormKind::alternating, std::move(m));
}

Reduction reduce(const FormMatrix& A, const Subspace& V2) {
    if (A.kind != FormKind::alternating)
        throw std::invalid_argument("reduce needs an alternating form");
    if (V2.ambient_dim() != A.dim())
        throw std::invalid_argument("V2 does not live in the form's space");

    const Matrix& B = V2.basis();  // rows span V2
    Matrix restricted = B * A.entries * B.transpose();
    Matrix rad_coords = kernel(restricted);  // rows, in V2 coordinates

    // Coset representatives: V2-coordinate directions completing the
    // radical to all of V2.
    int k = V2.dim();
    Matrix stacked = rad_coords;
    std::vector<std::vector<Rat>> reps;
    for (int i = 0; i < k; ++i) {
        std::vector<Rat> e(k);
        e[i] = 1;
        Matrix cand = stacked.stacked(Matrix::from_rows({e}));
        if (rank(cand) > rank(stacked)) {
            stacked = std::move(cand);
            reps.push_back(std::move(e));
        }
    }
    Matrix Q = reps.empty() ? Matrix(0, k) : Matrix::from_rows(reps);

    Reduction r;
    r.radical = Subspace::span(V2.ambient_dim(), rad_coords * B);
    r.reduced = FormMatrix(FormKind::alternating, Q * restricted * Q.transpose());
    r.quotient_basis = Q * B;
    return r;
}

Subspace build_V(const FormMatrix& omega, const Subspace& orbit) {
    if (omega.kind != FormKind::symmetric)
        throw std::invalid_argument("build_V needs a symmetric form");
    if (orbit.ambient_dim() != omega.dim())
        throw std::invalid_argument("orbit does not live in the form's space");
    if (rank(omega.entries) != omega.dim())
        throw std::invalid_argument("form is degenerate on the window");
    Subspace perp = annihilator(omega.entries, orbit);
    return Subspace::span(omega.dim(), perp.basis() * omega.entries);
}

DescentReport descent_check(const Subspace& V, const Matrix& orbit_map) {
    if (orbit_map.rows() != V.ambient_dim())
        throw std::invalid_argument("orbit map target differs from covector window");
    DescentReport r;
    r.pass = true;
    const Matrix& B = V.basis();
    for (int i = 0; i < B.rows(); ++i)
        for (int c = 0; c < orbit_map.cols(); ++c) {
            Rat val = 0;
            for (int j = 0; j < orbit_map.rows(); ++j)
                val += B.at(i, j) * orbit_map.at(j, c);
            if (val != 0) {
                r.pass = false;
                std::ostringstream os;
                os << "covector " << i << " does not annihilate orbit direction " << c
                   << " (value " << rat_to_string(val) << ")";
                r.witness = os.str();
                return r;
            }
        }
    return r;
}

}  // namespace loopform
