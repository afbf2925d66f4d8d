#pragma once

#include <loopform/rational.hpp>

#include <utility>
#include <vector>

namespace loopform {

/// Dense exact matrix over Q, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<std::vector<Rat>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    std::vector<Rat> row(int i) const;

    Matrix transpose() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Rat& s) const;
    bool operator==(const Matrix& o) const = default;

    bool is_zero() const;

    /// Appends the rows of `o` below this matrix (column counts must match).
    Matrix stacked(const Matrix& o) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

std::vector<Rat> mat_vec(const Matrix& m, const std::vector<Rat>& v);
std::vector<Rat> vec_mat(const std::vector<Rat>& v, const Matrix& m);
Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);

/// Reduced row-echelon form; second component lists pivot columns.
std::pair<Matrix, std::vector<int>> rref(Matrix m);

int rank(const Matrix& m);

/// Determinant via fraction-free elimination (square matrices only).
Rat det(const Matrix& m);

/// Inverse of a nonsingular square matrix; throws on singular input.
Matrix inverse(const Matrix& m);

/// Basis (as rows) of the right kernel {v : m v = 0}, in canonical RREF form.
Matrix kernel(const Matrix& m);

/// A subspace of Q^ambient, stored as an RREF basis so equality is
/// matrix equality.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(int ambient) { return span(ambient, Matrix(0, ambient)); }
    static Subspace full(int ambient) { return span(ambient, Matrix::identity(ambient)); }
    /// Row span of `rows` (rows need not be independent).
    static Subspace span(int ambient, const Matrix& rows);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const std::vector<Rat>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const = default;

private:
    int ambient_ = 0;
    Matrix basis_;  // RREF, full row rank, zero rows dropped
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Annihilator of s under the pairing V x W -> Q given by `pairing`
/// (rows indexed by V, columns by W): {w in W : pairing(v, w) = 0 for
/// all v in s}. Throws on dimension mismatch.
Subspace annihilator(const Matrix& pairing, const Subspace& s);

}  // namespace loopform
