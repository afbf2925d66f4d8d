#pragma once

#include <loopform/lie.hpp>
#include <loopform/matrix.hpp>
#include <loopform/poly.hpp>
#include <loopform/window.hpp>

#include <map>
#include <string>
#include <vector>

namespace loopform {

/// A marked point on P^1: a finite rational or the point at infinity.
struct MarkedPoint {
    bool infinite = false;
    Rat q;  // meaningful only when finite

    static MarkedPoint at(Rat value) { return {false, std::move(value)}; }
    static MarkedPoint infinity() { return {true, Rat(0)}; }
    bool operator==(const MarkedPoint&) const = default;
};

/// Marked points on P^1. Local parameter at a finite q is x - q; at
/// infinity it is t = 1/x.
struct MarkedCurve {
    std::vector<MarkedPoint> points;

    bool has_infinity() const;
    std::vector<Rat> finite_points() const;
    void validate() const;  // distinct points
};

/// Split SL(n)-bundle on P^1: transition diag(t^{a_1},...,t^{a_n}) at
/// the attachment point, which is always infinity here. The splitting
/// exponents sum to zero.
struct SplitBundle {
    int n = 2;
    std::vector<int> splitting;  // a_1 >= ... >= a_n, sum 0

    static SplitBundle trivial(int n);
    void validate() const;
};

/// Twist exponent of one Lie basis direction under conjugation by the
/// transition torus: diag(t^a) b diag(t^-a) = t^{deg} b.
int summand_degree(const SplitBundle& bundle, const LieAlgebra& g, int b);

/// Global section of ad(E)(j Sigma Q) (or its K_X twist) in the
/// trivialization over the affine chart: one rational function of x per
/// Lie basis direction. Differential-side values carry dx.
struct AdSection {
    const LieAlgebra* alg = nullptr;
    bool differential = false;
    std::vector<RatFunc> comp;  // indexed by Lie basis

    AdSection() = default;
    AdSection(const LieAlgebra* a, bool diff)
        : alg(a), differential(diff), comp(a->dim()) {}

    AdSection operator+(const AdSection& o) const;
    AdSection operator*(const Rat& s) const;
    bool operator==(const AdSection&) const = default;
};

/// Exact basis of H^0(X, ad(E)(j Sigma Q)) (function side) or
/// H^0(X, ad(E) (x) K_X(j Sigma Q)) (differential side). Dimensions
/// follow h^0(O(d)) = max(0, d+1) summand by summand.
std::vector<AdSection> section_basis(const SplitBundle& bundle, const MarkedCurve& curve,
                                     const LieAlgebra& g, Side side, int j);

/// Laurent-expands a section at every marked point (through the
/// transition twist at infinity) and embeds into the window.
std::vector<Rat> expand_section(const AdSection& s, const SplitBundle& bundle,
                                const MarkedCurve& curve, const TruncationWindow& w);

/// Image of H^0(ad(E)(N Sigma Q)) in the function-side window (the map
/// gamma of the truncated exact sequence).
Subspace gamma_image(const SplitBundle& bundle, const MarkedCurve& curve,
                     const LieAlgebra& g, const TruncationWindow& w, int N);

/// Image of H^0(ad(E) (x) K(j Sigma Q)) in the differential-side window
/// (the map eta).
Subspace eta_image(const SplitBundle& bundle, const MarkedCurve& curve,
                   const LieAlgebra& g, const TruncationWindow& w, int j);

/// Class in H^1(X, ad(E)(-m Sigma Q)) in canonical monomial form: a
/// two-chart cocycle is Pi'(x) * sum_j c_{b,j} x^j per Lie direction,
/// with Pi' the order-m vanishing factor at finite marked points away
/// from 0, reduced so only monomials outside both coboundary ranges
/// remain.
struct CechClass {
    const LieAlgebra* alg = nullptr;
    int m = 0;
    std::vector<std::map<int, Rat>> comp;

    bool is_zero() const;
    bool operator==(const CechClass&) const = default;
};

/// Monomial exponent range (lo, hi) of canonical H^1 representatives
/// for Lie direction b: strictly between the U1- and U0-coboundary
/// degrees.
std::pair<int, int> cech_monomial_range(const SplitBundle& bundle, const MarkedCurve& curve,
                                        const LieAlgebra& g, int m, int b);

int cech_dim(const SplitBundle& bundle, const MarkedCurve& curve, const LieAlgebra& g,
             int m);

std::vector<CechClass> cech_h1_basis(const SplitBundle& bundle, const MarkedCurve& curve,
                                     const LieAlgebra& g, int m);

/// Cech connecting map of
/// 0 -> ad(-m Sigma Q) -> ad(N Sigma Q) -> (window jets) -> 0:
/// lifts the jet vector chart by chart, takes the overlap difference,
/// and reduces to canonical form. Linear in w, and delta(gamma(..)) = 0.
CechClass connecting_delta(const std::vector<Rat>& w, const SplitBundle& bundle,
                           const MarkedCurve& curve, const LieAlgebra& g, int N, int m);

/// connecting_delta as a matrix (rows: Cech coordinates, cols: window
/// coordinates), for kernel computations.
Matrix delta_matrix(const SplitBundle& bundle, const MarkedCurve& curve,
                    const LieAlgebra& g, int N, int m);

std::vector<Rat> cech_coords(const CechClass& c, const SplitBundle& bundle,
                             const MarkedCurve& curve, const LieAlgebra& g);

/// Serre pairing B(c, tau) = Res_{x=0} (cocycle, tau) under the trace
/// form; tau a differential-side section with poles of order <= m.
Rat serre_pairing(const CechClass& c, const AdSection& tau, const SplitBundle& bundle,
                  const MarkedCurve& curve, const LieAlgebra& g);

struct DualityReport {
    bool pass = false;
    int gamma_dim = 0;
    int eta_dim = 0;
    int window_dim = 0;
    bool mutual_annihilators = false;
    bool dims_add_up = false;
    bool vanishing_conditions = false;
    std::string detail;
};

/// Verifies, inside the window, that the gamma- and eta-images are each
/// other's annihilators under the residue pairing.
DualityReport verify_duality(const SplitBundle& bundle, const MarkedCurve& curve,
                             const LieAlgebra& g, int N, int m);

struct CompatReport {
    bool pass = false;
    int trials = 0;
    int failures = 0;
    std::string witness;
};

/// Checks B(delta(w), tau) = R(w, eta(tau)) on seeded random pairs.
CompatReport verify_compatibility(const SplitBundle& bundle, const MarkedCurve& curve,
                                  const LieAlgebra& g, int N, int m, int trials,
                                  std::uint64_t seed);

}  // namespace loopform
