#pragma once

#include <loopform/matrix.hpp>

#include <string>
#include <vector>

namespace loopform {

enum class FormKind { symmetric, alternating, general };

/// Bilinear form on Q^dim with a declared symmetry kind, checked on
/// construction.
struct FormMatrix {
    FormKind kind = FormKind::general;
    Matrix entries;

    FormMatrix() = default;
    FormMatrix(FormKind k, Matrix m);

    int dim() const { return entries.rows(); }
    Rat apply(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
};

/// Point of the trivialized cotangent model G x s*: an opaque label for
/// the group point plus a covector over the fixed window basis.
struct CotangentPoint {
    std::string group_point;
    std::vector<Rat> covector;
};

/// Tangent vector of T(T*G) = s x s* in the product trivialization.
struct TangentVector {
    std::vector<Rat> u;  // s-coordinates
    std::vector<Rat> v;  // s*-coordinates
};

Rat liouville_one(const CotangentPoint& z, const TangentVector& t);

/// Constant model form: v2(u1) - v1(u2).
Rat liouville_two(const CotangentPoint& z, const TangentVector& t1,
                  const TangentVector& t2);

/// Block matrix [[0, I], [-I, 0]] of liouville_two on s + s* coordinates
/// (row vector acting on the left of column vector ordering (u, v)).
FormMatrix liouville_two_matrix(int half_dim);

struct Reduction {
    Subspace radical;          // K inside the ambient V1
    FormMatrix reduced;        // induced form on V2/K
    Matrix quotient_basis;     // coset representatives, rows in V1 coordinates
};

/// Linear symplectic reduction: restricts the alternating form A to V2,
/// computes the radical K, and returns the induced nondegenerate form on
/// V2/K with explicit coset representatives.
Reduction reduce(const FormMatrix& A, const Subspace& V2);

/// V = omega'((orbit)^perp): annihilator of the orbit under a full-rank
/// symmetric form, mapped to the dual window by v -> omega(v, .).
Subspace build_V(const FormMatrix& omega, const Subspace& orbit);

struct DescentReport {
    bool pass = false;
    std::string witness;
};

/// Checks that every covector in V annihilates every column image of
/// orbit_map (the paper's u(eta(u,v)) = 0 condition).
DescentReport descent_check(const Subspace& V, const Matrix& orbit_map);

}  // namespace loopform
