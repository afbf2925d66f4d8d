#pragma once

#include <loopform/laurent.hpp>
#include <loopform/lie.hpp>
#include <loopform/matrix.hpp>

#include <string>
#include <vector>

namespace loopform {

enum class Side { function, differential };

/// Finite truncation slice at n marked points. Function-side exponents
/// run over [-N, m-1] per point; differential-side over [-m, N-1], so
/// the residue pairing restricts to a perfect pairing between the two.
struct TruncationWindow {
    int npts = 1;
    int N = 0;
    int m = 1;

    bool operator==(const TruncationWindow&) const = default;
};

int window_dim(const TruncationWindow& w, const LieAlgebra& g);
int window_exp_low(const TruncationWindow& w, Side side);
int window_exp_high(const TruncationWindow& w, Side side);  // inclusive

/// Coordinate index of (point, exponent, Lie basis index).
int window_index(const TruncationWindow& w, const LieAlgebra& g, Side side,
                 int point, int exp, int b);

/// Embeds a tuple of per-point GLaurent values as window coordinates.
/// Exponents above the window top are truncated away; exponents below
/// the bottom throw (the pole part would be lost).
std::vector<Rat> window_embed(const TruncationWindow& w, const LieAlgebra& g,
                              const std::vector<GLaurent>& tuple);

/// Inverse of window_embed on one point slot.
GLaurent window_extract(const TruncationWindow& w, const LieAlgebra& g, Side side,
                        const std::vector<Rat>& v, int point);

/// A subspace of one side of a truncation window.
struct WindowSubspace {
    TruncationWindow window;
    Side side = Side::function;
    Subspace space;

    bool operator==(const WindowSubspace&) const = default;
};

/// Multi-point residue pairing: sum over points of Res (x_i, y_i) under
/// the trace form. x function-side, y differential-side.
Rat residue_pairing(const std::vector<GLaurent>& x, const std::vector<GLaurent>& y);

/// Loop bilinear form <A t^a, B t^b> = delta_{a+b,0}(A, B), both sides
/// function-side.
Rat loop_form(const GLaurent& x, const GLaurent& y);

/// Gram matrix of the residue pairing, function window x differential
/// window. A permutation of block copies of the Killing Gram matrix,
/// hence invertible.
Matrix residue_gram(const TruncationWindow& w, const LieAlgebra& g);

/// Gram matrix of the loop form on the symmetric exponent range
/// [-S, S] (coordinate (a + S)*dim(g) + b). Each exponent has a
/// partner, so the matrix is invertible.
Matrix loop_gram(int S, const LieAlgebra& g);

/// Annihilator of s inside the opposite-side window under the residue
/// pairing.
WindowSubspace window_annihilator(const WindowSubspace& s, const LieAlgebra& g);

struct BoundedAnnihilatorReport {
    bool pass = false;
    int subspace_dim = 0;
    int annihilator_dim = 0;
    int expected_dim = 0;
    int window_dim = 0;
    std::string detail;
};

/// Exact finite-window check that the residue-pairing annihilator of
/// t^k g[[t]] is t^{-k} g[[t]] dt. Requires a single-point window with
/// N >= k+1 and m >= k+1 so both sides are faithfully represented.
BoundedAnnihilatorReport bounded_annihilator_check(int k, const TruncationWindow& w,
                                                   const LieAlgebra& g);

}  // namespace loopform
