#pragma once

#include <loopform/matrix.hpp>
#include <loopform/rational.hpp>

#include <memory>
#include <vector>

namespace loopform {

/// Coordinate vector of a Lie algebra element over the algebra's basis.
using GElement = std::vector<Rat>;

/// A finite-dimensional matrix Lie algebra with exact structure data.
/// Only sl(n) is constructed here, but all consumers go through the
/// descriptor so other structure-constant algebras slot in unchanged.
class LieAlgebra {
public:
    static LieAlgebra sl(int n);

    int n() const { return n_; }
    int dim() const { return dim_; }
    const std::vector<Matrix>& basis() const { return basis_; }
    const Matrix& killing_gram() const { return killing_gram_; }

    /// Structure constant c^k_{ij} in [b_i, b_j] = sum_k c^k_{ij} b_k.
    const Rat& structure(int i, int j, int k) const {
        return structure_[(std::size_t(i) * dim_ + j) * dim_ + k];
    }

    Matrix matrix_of(const GElement& x) const;
    GElement coords_of(const Matrix& m) const;

    /// Trace form tr(ab) in the defining representation; for sl(n) this
    /// is the normalization with (h_theta, h_theta) = 2.
    Rat killing(const GElement& a, const GElement& b) const;

    GElement bracket(const GElement& a, const GElement& b) const;

    /// Ad(g): x -> g x g^{-1} for an invertible n x n matrix g.
    GElement ad_conjugate(const Matrix& g, const GElement& x) const;

    bool operator==(const LieAlgebra& o) const { return n_ == o.n_; }

private:
    int n_ = 0, dim_ = 0;
    std::vector<Matrix> basis_;
    std::vector<Rat> structure_;
    Matrix killing_gram_;
    Matrix coord_solver_;  // dim x n^2, sends a flattened matrix to coordinates
};

}  // namespace loopform
