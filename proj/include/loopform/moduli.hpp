#pragma once

#include <loopform/dual.hpp>
#include <loopform/laurent.hpp>
#include <loopform/liouville.hpp>
#include <loopform/p1.hpp>
#include <loopform/window.hpp>

#include <cstdint>
#include <string>

namespace loopform {

/// Point of the connection model: a loop-group basepoint alpha and the
/// full connection matrix A (coefficient of dt) in the disc
/// trivialization. The Higgs field at the point is A - connection_of(alpha).
template <class R>
struct ConnPointT {
    MatrixLaurent<R> alpha;
    MatrixLaurent<R> A;
};
using ConnPoint = ConnPointT<Rat>;

/// A_alpha = alpha^{-1} d(alpha): the disc reading of the connection
/// that is trivial away from the marked point.
template <class R>
MatrixLaurent<R> connection_of(const MatrixLaurent<R>& alpha) {
    return alpha.unimodular_inverse() * alpha.derivative();
}

/// Gauge model: matrices algebraic away from the marked point, i.e.
/// polynomial in x = 1/t, with det = 1.
template <class R>
bool in_gauge_model(const MatrixLaurent<R>& g) {
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            for (const auto& [e, v] : g.at(i, j).coeffs())
                if (e > 0)
                    return false;
    return g.is_unimodular();
}

/// Right gauge action on connection matrices: A -> g^{-1} A g + g^{-1} dg.
template <class R>
ConnPointT<R> gauge_act(const ConnPointT<R>& pt, const MatrixLaurent<R>& g) {
    if (!in_gauge_model(g))
        throw std::invalid_argument("gauge element is not polynomial in x with det 1");
    auto gi = g.unimodular_inverse();
    return {pt.alpha * g, gi * pt.A * g + gi * g.derivative()};
}

/// Negative control for the symplecto check: the action formula read
/// with the covariant derivative of g but with the dg term dropped,
/// theta -> g^{-1} theta g + g^{-1} A_alpha g - A_alpha. Not a valid
/// action; fails the pullback test.
template <class R>
MatrixLaurent<R> corrupt_theta(const MatrixLaurent<R>& alpha, const MatrixLaurent<R>& theta,
                               const MatrixLaurent<R>& g) {
    auto gi = g.unimodular_inverse();
    auto a = connection_of(alpha);
    return gi * theta * g + gi * a * g - a;
}

MatrixLaurent<Dual> dual_lift(const MatrixLaurent<Rat>& value, const MatrixLaurent<Rat>& eps);
MatrixLaurent<Rat> dual_real(const MatrixLaurent<Dual>& m);
MatrixLaurent<Rat> dual_eps(const MatrixLaurent<Dual>& m);

/// Order-k framing directions: t^k g[[t]] cut to the function window.
struct FramingModel {
    int k = 1;
    Subspace lie_subgroup_window;
};
FramingModel framing_model(int k, const TruncationWindow& w, const LieAlgebra& g);

/// Window jets of the gauge-orbit directions Ad(alpha)(g[x]) with pole
/// order at most N. Single-point windows only.
WindowSubspace orbit_subspace(const MatrixLaurent<Rat>& alpha, const LieAlgebra& g,
                              const TruncationWindow& w);

/// Window jets of the Higgs fiber: global ad-valued differentials with
/// pole order <= m at the marked point, read in the disc trivialization.
/// Requires alpha = (split transition) * u with u in the gauge model.
WindowSubspace higgs_fiber(const MatrixLaurent<Rat>& alpha, const SplitBundle& bundle,
                           const LieAlgebra& g, const TruncationWindow& w);

/// Same with pole order bounded by k <= m (the W^k subbundle).
WindowSubspace higgs_fiber_bounded(const MatrixLaurent<Rat>& alpha, const SplitBundle& bundle,
                                   const LieAlgebra& g, const TruncationWindow& w, int k);

/// The connection-model fiber, computed independently through the loop
/// form: V = omega'((orbit)^perp) in a large symmetric exponent range,
/// carried to the differential window by t^a <-> t^{a-1} dt. Equals
/// higgs_fiber by the duality theorem.
WindowSubspace conn_fiber(const MatrixLaurent<Rat>& alpha, const LieAlgebra& g,
                          const TruncationWindow& w);

WindowSubspace conn_fiber_bounded(const MatrixLaurent<Rat>& alpha, const LieAlgebra& g,
                                  const TruncationWindow& w, int k);

enum class ModelKind { higgs, higgs_bounded, conn, conn_bounded };

struct ReducedFormReport {
    bool pass = false;
    ModelKind kind = ModelKind::higgs;
    int window_side_dim = 0;   // dim of the s-window (= dim of its dual)
    int fiber_dim = 0;
    int v2_dim = 0;
    int orbit_dim = 0;
    int framing_dim = 0;
    int expected_radical_dim = 0;
    int radical_dim = 0;
    int reduced_rank = 0;
    bool radical_matches = false;
    bool reduced_nondegenerate = false;
    std::string detail;
};

/// Tangent-slice model of the four theorems: V1 = window + dual window
/// with the constant Liouville form, V2 = window + fiber directions;
/// reduces and compares the radical with orbit (+ framing) directions.
ReducedFormReport reduced_form_report(ModelKind kind, int k, const MatrixLaurent<Rat>& alpha,
                                      const SplitBundle& bundle, const LieAlgebra& g,
                                      const TruncationWindow& w);

struct GaugeSymplectoReport {
    bool pass = false;
    int trials = 0;
    int failures = 0;
    int control_failures = 0;
    bool negative_control_failed = false;
    std::string witness;
};

/// Dual-number pullback of the Liouville two-form along the gauge
/// action of g_elt at seeded random points and tangent pairs; also runs
/// the corrupted action as a negative control.
GaugeSymplectoReport gauge_symplecto_check(const MatrixLaurent<Rat>& alpha,
                                           const MatrixLaurent<Rat>& g_elt,
                                           const LieAlgebra& g, const TruncationWindow& w,
                                           int trials, std::uint64_t seed);

}  // namespace loopform
