#include <doctest.h>

#include <loopform/dual.hpp>
#include <loopform/moduli.hpp>
#include <loopform/p1.hpp>
#include <loopform/rng.hpp>
#include <loopform/window.hpp>

using namespace loopform;

namespace {

MatrixLaurent<Rat> elementary(int i, int j, const ScalarLaurent<Rat>& p) {
    auto m = MatrixLaurent<Rat>::identity(2);
    m.at(i, j) = p;
    return m;
}

}  // namespace

TEST_CASE("dual number arithmetic") {
    Dual a(Rat(2), Rat(3)), b(Rat(5), Rat(-1));
    CHECK(a * b == Dual(Rat(10), Rat(13)));
    CHECK((a * b) / b == a);
    CHECK(Dual(Rat(0), Rat(1)) * Dual(Rat(0), Rat(1)) == 0);  // eps^2 = 0
    CHECK_THROWS(a / Dual(Rat(0), Rat(4)));
    auto lifted = dual_lift(MatrixLaurent<Rat>::torus({1, -1}),
                            elementary(0, 1, ScalarLaurent<Rat>::one()));
    CHECK(dual_real(lifted) == MatrixLaurent<Rat>::torus({1, -1}));
    CHECK(dual_eps(lifted) == elementary(0, 1, ScalarLaurent<Rat>::one()));
}

TEST_CASE("connection_of on pinned group elements") {
    CHECK(connection_of(MatrixLaurent<Rat>::identity(2)) == MatrixLaurent<Rat>(2));
    // alpha = diag(t, t^-1): alpha^-1 alpha' = diag(1, -1) t^-1.
    auto torus_conn = connection_of(MatrixLaurent<Rat>::torus({1, -1}));
    auto expected = MatrixLaurent<Rat>(2);
    expected.at(0, 0) = ScalarLaurent<Rat>::monomial(-1, Rat(1));
    expected.at(1, 1) = ScalarLaurent<Rat>::monomial(-1, Rat(-1));
    CHECK(torus_conn == expected);
    // Unipotent [[1, t], [0, 1]]: g^-1 g' = E_12.
    auto uni = elementary(0, 1, ScalarLaurent<Rat>::monomial(1, Rat(1)));
    CHECK(connection_of(uni) == elementary(0, 1, ScalarLaurent<Rat>::one()) -
                                    MatrixLaurent<Rat>::identity(2));
}

TEST_CASE("gauge action: identity, pinned example, and the gauge model") {
    ConnPoint pt{MatrixLaurent<Rat>::identity(2), MatrixLaurent<Rat>(2)};
    auto g_inv_t = elementary(0, 1, ScalarLaurent<Rat>::monomial(-1, Rat(1)));
    REQUIRE(in_gauge_model(g_inv_t));
    auto moved = gauge_act(pt, g_inv_t);
    CHECK(moved.alpha == g_inv_t);
    // A' = g^-1 dg = -E_12 t^-2.
    CHECK(moved.A == elementary(0, 1, ScalarLaurent<Rat>::monomial(-2, Rat(-1))) -
                         MatrixLaurent<Rat>::identity(2));
    CHECK(gauge_act(pt, MatrixLaurent<Rat>::identity(2)).A == pt.A);
    // Positive t powers are outside the model; torus factors too (det != constancy aside).
    CHECK_FALSE(in_gauge_model(elementary(0, 1, ScalarLaurent<Rat>::monomial(1, Rat(1)))));
    CHECK_THROWS(gauge_act(pt, elementary(0, 1, ScalarLaurent<Rat>::monomial(1, Rat(1)))));
}

TEST_CASE("right-action axiom on random gauge pairs") {
    Rng rng(81);
    auto rand_g = [&] {
        ScalarLaurent<Rat> p, q;
        for (int e = 0; e >= -2; --e) {
            p.add(e, rng.small_rat(3, 2));
            q.add(e, rng.small_rat(3, 2));
        }
        return elementary(0, 1, p) * elementary(1, 0, q);
    };
    auto alpha = MatrixLaurent<Rat>::torus({1, -1});
    ConnPoint pt{alpha, connection_of(alpha)};
    for (int trial = 0; trial < 8; ++trial) {
        auto g1 = rand_g(), g2 = rand_g();
        auto lhs = gauge_act(gauge_act(pt, g1), g2);
        auto rhs = gauge_act(pt, g1 * g2);
        CHECK(lhs.alpha == rhs.alpha);
        CHECK(lhs.A == rhs.A);
    }
}

TEST_CASE("framing model dimensions") {
    LieAlgebra g = LieAlgebra::sl(2);
    TruncationWindow w{1, 2, 3};
    // Function window exps -2..2; order-k framing keeps exps k..2.
    CHECK(framing_model(1, w, g).lie_subgroup_window.dim() == 2 * g.dim());
    CHECK(framing_model(2, w, g).lie_subgroup_window.dim() == 1 * g.dim());
    CHECK(framing_model(3, w, g).lie_subgroup_window.dim() == 0);
}

TEST_CASE("orbit subspace at the trivial basepoint") {
    LieAlgebra g = LieAlgebra::sl(2);
    TruncationWindow w{1, 3, 3};
    auto orbit = orbit_subspace(MatrixLaurent<Rat>::identity(2), g, w);
    // Jets of g[x] = g[t^-1] with pole order <= N: exps -3..0.
    CHECK(orbit.space.dim() == (3 + 1) * g.dim());
    CHECK(orbit.side == Side::function);
    // Gauge factors in the model do not move the orbit.
    auto u = elementary(0, 1, ScalarLaurent<Rat>::monomial(-1, Rat(1)));
    CHECK(orbit_subspace(u, g, w).space == orbit.space);
}

TEST_CASE("orbit subspace at a split basepoint sees the twist") {
    LieAlgebra g = LieAlgebra::sl(2);
    TruncationWindow w{1, 3, 3};
    auto alpha = MatrixLaurent<Rat>::torus({1, -1});
    auto orbit = orbit_subspace(alpha, g, w);
    // Ad(diag(t,t^-1)) shifts the e-line by +2 and the f-line by -2.
    // Window exps [-3, 2]: 6 e-directions + 4 h-directions + 2
    // f-directions.
    CHECK(orbit.space.dim() == 12);
    // Membership: t^2 e = Ad(alpha)(x^0 e) lies inside.
    GLaurent te(&g, false);
    te.add_term(2, GElement{Rat(1), Rat(0), Rat(0)});
    CHECK(orbit.space.contains(window_embed(w, g, {te})));
    // t^-3 f = Ad(alpha)(x^1 f) too; t^-1 f is not reachable.
    GLaurent deep(&g, false);
    deep.add_term(-3, GElement{Rat(0), Rat(1), Rat(0)});
    CHECK(orbit.space.contains(window_embed(w, g, {deep})));
    GLaurent shallow(&g, false);
    shallow.add_term(-1, GElement{Rat(0), Rat(1), Rat(0)});
    CHECK_FALSE(orbit.space.contains(window_embed(w, g, {shallow})));
}

TEST_CASE("higgs and connection fibers agree (duality of the two models)") {
    LieAlgebra g = LieAlgebra::sl(2);
    TruncationWindow w{1, 3, 3};
    SplitBundle triv = SplitBundle::trivial(2);
    SplitBundle split{2, {1, -1}};
    auto id2 = MatrixLaurent<Rat>::identity(2);
    auto tor = MatrixLaurent<Rat>::torus({1, -1});
    CHECK(higgs_fiber(id2, triv, g, w).space == conn_fiber(id2, g, w).space);
    CHECK(higgs_fiber(tor, split, g, w).space == conn_fiber(tor, g, w).space);
    for (int k = 1; k <= 2; ++k) {
        CHECK(higgs_fiber_bounded(id2, triv, g, w, k).space ==
              conn_fiber_bounded(id2, g, w, k).space);
        CHECK(higgs_fiber_bounded(tor, split, g, w, k).space ==
              conn_fiber_bounded(tor, g, w, k).space);
    }
    // A basepoint whose torus part disagrees with the bundle is refused.
    CHECK_THROWS(higgs_fiber(tor, triv, g, w));
}

TEST_CASE("higgs fiber contents at the trivial basepoint") {
    LieAlgebra g = LieAlgebra::sl(2);
    TruncationWindow w{1, 3, 3};
    auto fiber = higgs_fiber(MatrixLaurent<Rat>::identity(2), SplitBundle::trivial(2), g, w);
    CHECK(fiber.space.dim() == 6);
    CHECK(fiber.side == Side::differential);
    // Global differentials with a pole at one point have pole order >= 2
    // there: t^-2 dt and t^-3 dt directions are in, t^-1 dt is not.
    for (int e : {-3, -2}) {
        GLaurent x(&g, true);
        x.add_term(e, GElement{Rat(1), Rat(0), Rat(0)});
        CHECK(fiber.space.contains(window_embed(w, g, {x})));
    }
    GLaurent res(&g, true);
    res.add_term(-1, GElement{Rat(1), Rat(0), Rat(0)});
    CHECK_FALSE(fiber.space.contains(window_embed(w, g, {res})));
}

TEST_CASE("fiber is the residue annihilator of the orbit") {
    LieAlgebra g = LieAlgebra::sl(2);
    TruncationWindow w{1, 3, 3};
    for (auto alpha : {MatrixLaurent<Rat>::identity(2), MatrixLaurent<Rat>::torus({1, -1})}) {
        SplitBundle bundle = alpha == MatrixLaurent<Rat>::identity(2)
                                 ? SplitBundle::trivial(2)
                                 : SplitBundle{2, {1, -1}};
        auto orbit = orbit_subspace(alpha, g, w);
        auto fiber = higgs_fiber(alpha, bundle, g, w);
        CHECK(window_annihilator(orbit, g).space == fiber.space);
    }
}

TEST_CASE("reduced-form reports for all four models") {
    LieAlgebra g = LieAlgebra::sl(2);
    TruncationWindow w{1, 3, 3};
    auto id2 = MatrixLaurent<Rat>::identity(2);
    auto r = reduced_form_report(ModelKind::higgs, 1, id2, SplitBundle::trivial(2), g, w);
    CHECK(r.pass);
    CHECK(r.fiber_dim == 6);
    CHECK(r.orbit_dim == 12);
    CHECK(r.v2_dim == 24);
    CHECK(r.radical_dim == 12);
    CHECK(r.reduced_rank == 12);
    auto rb = reduced_form_report(ModelKind::higgs_bounded, 1, id2, SplitBundle::trivial(2),
                                  g, w);
    CHECK(rb.pass);
    CHECK(rb.fiber_dim == 0);
    CHECK(rb.radical_dim == 18);  // orbit + framing
    auto tor = MatrixLaurent<Rat>::torus({1, -1});
    auto rc = reduced_form_report(ModelKind::conn_bounded, 1, tor, SplitBundle{2, {1, -1}},
                                  g, w);
    CHECK(rc.pass);
    CHECK(rc.fiber_dim == 2);
    CHECK(rc.radical_dim == 16);
}

TEST_CASE("symplectic pullback check and its negative control") {
    LieAlgebra g = LieAlgebra::sl(2);
    TruncationWindow w{1, 3, 3};
    auto id2 = MatrixLaurent<Rat>::identity(2);
    auto sample = elementary(0, 1, ScalarLaurent<Rat>::monomial(-1, Rat(1)));
    auto r = gauge_symplecto_check(id2, sample, g, w, 5, 1234);
    CHECK(r.pass);
    CHECK(r.failures == 0);
    CHECK(r.negative_control_failed);
    // The identity preserves everything, and its corruption is also exact.
    auto rid = gauge_symplecto_check(id2, MatrixLaurent<Rat>::identity(2), g, w, 3, 1);
    CHECK(rid.pass);
    CHECK_FALSE(rid.negative_control_failed);
}
