#include <loopform/moduli.hpp>
#include <loopform/rng.hpp>

#include <sstream>
#include <stdexcept>

namespace loopform {

namespace {

std::vector<GLaurent> conjugated_basis(const MatrixLaurent<Rat>& alpha, const LieAlgebra& g) {
    std::vector<GLaurent> conj;
    for (int b = 0; b < g.dim(); ++b) {
        GElement unit(g.dim());
        unit[b] = 1;
        conj.push_back(loop_conjugate(alpha, GLaurent::term(&g, false, 0, unit)));
    }
    return conj;
}

// Exponent spread of the conjugated basis; bounds how far Ad(alpha) can
// move window content.
int conjugation_spread(const std::vector<GLaurent>& conj) {
    int lo = 0, hi = 0;
    for (const auto& c : conj) {
        if (c.coeffs().empty())
            continue;
        lo = std::min(lo, c.coeffs().begin()->first);
        hi = std::max(hi, c.coeffs().rbegin()->first);
    }
    return hi - lo;
}

MatrixLaurent<Rat> window_to_matrix(const TruncationWindow& w, const LieAlgebra& g,
                                    Side side, const std::vector<Rat>& coords) {
    return to_matrix_laurent(window_extract(w, g, side, coords, 0));
}

// Residue of tr(f * v) dt: f function-side, v the dt-coefficient.
Rat res_tr(const MatrixLaurent<Rat>& f, const MatrixLaurent<Rat>& v) {
    return (f * v).trace().coeff(-1);
}

void require_single_point(const TruncationWindow& w) {
    if (w.npts != 1)
        throw std::invalid_argument("loop-model operations need a single-point window");
}

// u with only nonpositive exponents would pass in_gauge_model; factor
// alpha = transition * u and insist u is a gauge-model element.
void validate_basepoint(const MatrixLaurent<Rat>& alpha, const SplitBundle& bundle) {
    std::vector<int> neg;
    for (int a : bundle.splitting)
        neg.push_back(-a);
    auto u = MatrixLaurent<Rat>::torus(neg) * alpha;
    if (!in_gauge_model(u))
        throw std::invalid_argument(
            "basepoint is not (split transition) * (gauge-model element)");
}

WindowSubspace higgs_fiber_impl(const MatrixLaurent<Rat>& alpha, const SplitBundle& bundle,
                                const LieAlgebra& g, const TruncationWindow& w, int j) {
    require_single_point(w);
    validate_basepoint(alpha, bundle);
    if (j > w.m)
        throw std::invalid_argument("pole bound exceeds the window depth");
    MarkedCurve curve{{MarkedPoint::infinity()}};
    auto basis = section_basis(bundle, curve, g, Side::differential, j);
    std::vector<std::vector<Rat>> rows;
    for (const auto& s : basis)
        rows.push_back(expand_section(s, bundle, curve, w));
    return {w, Side::differential,
            Subspace::span(window_dim(w, g), Matrix::from_rows(rows))};
}

WindowSubspace conn_fiber_impl(const MatrixLaurent<Rat>& alpha, const LieAlgebra& g,
                               const TruncationWindow& w, int pole_bound) {
    require_single_point(w);
    auto conj = conjugated_basis(alpha, g);
    int L = conjugation_spread(conj) + 2;
    int S = std::max(w.N, w.m) + L + 1;
    int dim = g.dim();
    int D = (2 * S + 1) * dim;
    auto idx = [&](int a, int b) { return (a + S) * dim + b; };

    Matrix omega = loop_gram(S, g);

    // Orbit directions Ad(alpha)(X x^s) inside the symmetric exponent range.
    std::vector<std::vector<Rat>> orows;
    for (int s = 0;; ++s) {
        bool any = false;
        for (int b = 0; b < dim; ++b) {
            const auto& c = conj[b].coeffs();
            if (c.empty() || c.begin()->first - s < -S)
                continue;
            any = true;
            std::vector<Rat> row(D);
            for (const auto& [e, coeff] : c)
                for (int b2 = 0; b2 < dim; ++b2)
                    row[idx(e - s, b2)] += coeff[b2];
            orows.push_back(std::move(row));
        }
        if (!any)
            break;
    }
    Subspace orbit_big = Subspace::span(D, Matrix::from_rows(orows));

    Subspace V = build_V(FormMatrix(FormKind::symmetric, omega), orbit_big);

    // Covector coordinate a corresponds to element exponent c = -1 - a
    // of the differential side; keep pole order <= pole_bound.
    std::vector<std::vector<Rat>> cut_rows;
    for (int a = -S; a <= pole_bound - 1; ++a)
        for (int b = 0; b < dim; ++b) {
            std::vector<Rat> e(D);
            e[idx(a, b)] = 1;
            cut_rows.push_back(std::move(e));
        }
    Subspace kept = subspace_intersect(V, Subspace::span(D, Matrix::from_rows(cut_rows)));

    Matrix kinv = inverse(g.killing_gram());
    int wd = window_dim(w, g);
    std::vector<std::vector<Rat>> rows;
    for (int r = 0; r < kept.basis().rows(); ++r) {
        std::vector<Rat> out(wd);
        for (int a = -w.N; a <= pole_bound - 1; ++a) {
            int c = -1 - a;  // in [-pole_bound, N-1]
            for (int b = 0; b < dim; ++b) {
                Rat v = 0;
                for (int b2 = 0; b2 < dim; ++b2)
                    v += kinv.at(b, b2) * kept.basis().at(r, idx(a, b2));
                out[window_index(w, g, Side::differential, 0, c, b)] = v;
            }
        }
        rows.push_back(std::move(out));
    }
    return {w, Side::differential, Subspace::span(wd, Matrix::from_rows(rows))};
}

std::vector<Rat> concat(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

}  // namespace

MatrixLaurent<Dual> dual_lift(const MatrixLaurent<Rat>& value, const MatrixLaurent<Rat>& eps) {
    if (value.n() != eps.n())
        throw std::invalid_argument("dual_lift size mismatch");
    MatrixLaurent<Dual> m(value.n());
    for (int i = 0; i < value.n(); ++i)
        for (int j = 0; j < value.n(); ++j) {
            for (const auto& [e, v] : value.at(i, j).coeffs())
                m.at(i, j).add(e, Dual(v, 0));
            for (const auto& [e, v] : eps.at(i, j).coeffs())
                m.at(i, j).add(e, Dual(0, v));
        }
    return m;
}

MatrixLaurent<Rat> dual_real(const MatrixLaurent<Dual>& m) {
    MatrixLaurent<Rat> r(m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            for (const auto& [e, v] : m.at(i, j).coeffs())
                r.at(i, j).add(e, v.a);
    return r;
}

MatrixLaurent<Rat> dual_eps(const MatrixLaurent<Dual>& m) {
    MatrixLaurent<Rat> r(m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            for (const auto& [e, v] : m.at(i, j).coeffs())
                r.at(i, j).add(e, v.b);
    return r;
}

FramingModel framing_model(int k, const TruncationWindow& w, const LieAlgebra& g) {
    if (k < 1)
        throw std::invalid_argument("framing order must be >= 1");
    require_single_point(w);
    std::vector<std::vector<Rat>> rows;
    int wd = window_dim(w, g);
    for (int e = std::max(k, -w.N); e <= w.m - 1; ++e)
        for (int b = 0; b < g.dim(); ++b) {
            std::vector<Rat> v(wd);
            v[window_index(w, g, Side::function, 0, e, b)] = 1;
            rows.push_back(std::move(v));
        }
    return {k, Subspace::span(wd, Matrix::from_rows(rows))};
}

WindowSubspace orbit_subspace(const MatrixLaurent<Rat>& alpha, const LieAlgebra& g,
                              const TruncationWindow& w) {
    require_single_point(w);
    auto conj = conjugated_basis(alpha, g);
    int L = conjugation_spread(conj) + 2;
    TruncationWindow big{1, w.N + L, w.m};
    int bd = window_dim(big, g);

    std::vector<std::vector<Rat>> rows;
    for (int s = 0;; ++s) {
        bool any = false;
        for (int b = 0; b < g.dim(); ++b) {
            const auto& c = conj[b].coeffs();
            if (c.empty() || c.begin()->first - s < -big.N)
                continue;
            any = true;
            auto shifted = mul_scalar(ScalarLaurent<Rat>::monomial(-s, Rat(1)), conj[b]);
            rows.push_back(window_embed(big, g, {shifted}));
        }
        if (!any)
            break;
    }
    Subspace sp = Subspace::span(bd, Matrix::from_rows(rows));

    // Only elements with pole order <= N belong to the window model.
    std::vector<std::vector<Rat>> cut_rows;
    for (int e = -w.N; e <= w.m - 1; ++e)
        for (int b = 0; b < g.dim(); ++b) {
            std::vector<Rat> v(bd);
            v[window_index(big, g, Side::function, 0, e, b)] = 1;
            cut_rows.push_back(std::move(v));
        }
    Subspace kept = subspace_intersect(sp, Subspace::span(bd, Matrix::from_rows(cut_rows)));

    int wd = window_dim(w, g);
    std::vector<std::vector<Rat>> out;
    for (int r = 0; r < kept.basis().rows(); ++r) {
        std::vector<Rat> v(wd);
        for (int e = -w.N; e <= w.m - 1; ++e)
            for (int b = 0; b < g.dim(); ++b)
                v[window_index(w, g, Side::function, 0, e, b)] =
                    kept.basis().at(r, window_index(big, g, Side::function, 0, e, b));
        out.push_back(std::move(v));
    }
    return {w, Side::function, Subspace::span(wd, Matrix::from_rows(out))};
}

WindowSubspace higgs_fiber(const MatrixLaurent<Rat>& alpha, const SplitBundle& bundle,
                           const LieAlgebra& g, const TruncationWindow& w) {
    return higgs_fiber_impl(alpha, bundle, g, w, w.m);
}

WindowSubspace higgs_fiber_bounded(const MatrixLaurent<Rat>& alpha, const SplitBundle& bundle,
                                   const LieAlgebra& g, const TruncationWindow& w, int k) {
    if (k < 1)
        throw std::invalid_argument("pole bound must be >= 1");
    return higgs_fiber_impl(alpha, bundle, g, w, k);
}

WindowSubspace conn_fiber(const MatrixLaurent<Rat>& alpha, const LieAlgebra& g,
                          const TruncationWindow& w) {
    return conn_fiber_impl(alpha, g, w, w.m);
}

WindowSubspace conn_fiber_bounded(const MatrixLaurent<Rat>& alpha, const LieAlgebra& g,
                                  const TruncationWindow& w, int k) {
    if (k < 1)
        throw std::invalid_argument("pole bound must be >= 1");
    if (k > w.m)
        throw std::invalid_argument("pole bound exceeds the window depth");
    return conn_fiber_impl(alpha, g, w, k);
}

ReducedFormReport reduced_form_report(ModelKind kind, int k, const MatrixLaurent<Rat>& alpha,
                                      const SplitBundle& bundle, const LieAlgebra& g,
                                      const TruncationWindow& w) {
    ReducedFormReport rep;
    rep.kind = kind;
    int D = window_dim(w, g);
    rep.window_side_dim = D;

    WindowSubspace fiber;
    switch (kind) {
        case ModelKind::higgs:
            fiber = higgs_fiber(alpha, bundle, g, w);
            break;
        case ModelKind::higgs_bounded:
            fiber = higgs_fiber_bounded(alpha, bundle, g, w, k);
            break;
        case ModelKind::conn:
            validate_basepoint(alpha, bundle);
            fiber = conn_fiber(alpha, g, w);
            break;
        case ModelKind::conn_bounded:
            validate_basepoint(alpha, bundle);
            fiber = conn_fiber_bounded(alpha, g, w, k);
            break;
    }
    rep.fiber_dim = fiber.space.dim();

    // Slice tangent space: all of the s-window plus the fiber directions
    // carried to the dual side by the residue pairing.
    Matrix gram = residue_gram(w, g);
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> zero(D);
    for (int i = 0; i < D; ++i) {
        std::vector<Rat> e(D);
        e[i] = 1;
        rows.push_back(concat(e, zero));
    }
    for (int r = 0; r < fiber.space.basis().rows(); ++r)
        rows.push_back(concat(zero, mat_vec(gram, fiber.space.basis().row(r))));
    Subspace V2 = Subspace::span(2 * D, Matrix::from_rows(rows));
    rep.v2_dim = V2.dim();

    Reduction red = reduce(liouville_two_matrix(D), V2);
    rep.radical_dim = red.radical.dim();
    rep.reduced_rank = rank(red.reduced.entries);
    rep.reduced_nondegenerate =
        (rep.reduced_rank == red.reduced.dim()) &&
        (rep.reduced_rank == rep.v2_dim - rep.radical_dim);

    Subspace expected = orbit_subspace(alpha, g, w).space;
    rep.orbit_dim = expected.dim();
    if (kind == ModelKind::higgs_bounded || kind == ModelKind::conn_bounded) {
        Subspace fr = framing_model(k, w, g).lie_subgroup_window;
        rep.framing_dim = fr.dim();
        expected = subspace_sum(expected, fr);
    }
    std::vector<std::vector<Rat>> erows;
    for (int r = 0; r < expected.basis().rows(); ++r)
        erows.push_back(concat(expected.basis().row(r), zero));
    Subspace expected2 = Subspace::span(2 * D, Matrix::from_rows(erows));
    rep.expected_radical_dim = expected2.dim();
    rep.radical_matches = (red.radical == expected2);

    rep.pass = rep.radical_matches && rep.reduced_nondegenerate;
    std::ostringstream os;
    os << "fiber=" << rep.fiber_dim << " V2=" << rep.v2_dim << " radical=" << rep.radical_dim
       << " expected=" << rep.expected_radical_dim << " reduced_rank=" << rep.reduced_rank;
    rep.detail = os.str();
    return rep;
}

GaugeSymplectoReport gauge_symplecto_check(const MatrixLaurent<Rat>& alpha,
                                           const MatrixLaurent<Rat>& g_elt,
                                           const LieAlgebra& g, const TruncationWindow& w,
                                           int trials, std::uint64_t seed) {
    require_single_point(w);
    if (!in_gauge_model(g_elt))
        throw std::invalid_argument("gauge element is not polynomial in x with det 1");
    GaugeSymplectoReport rep;
    rep.trials = trials;
    Rng rng(seed);
    int fd = window_dim(w, g);
    auto a_conn = connection_of(alpha);
    MatrixLaurent<Rat> zero(alpha.n());
    auto g_dual = dual_lift(g_elt, zero);

    for (int trial = 0; trial < trials; ++trial) {
        auto theta = window_to_matrix(w, g, Side::differential, rng.rat_vector(fd, 5, 3));
        auto base_a = a_conn + theta;

        MatrixLaurent<Rat> u[2], v[2], u_img[2], v_img[2], v_img_c[2];
        for (int i = 0; i < 2; ++i) {
            u[i] = window_to_matrix(w, g, Side::function, rng.rat_vector(fd, 5, 3));
            v[i] = window_to_matrix(w, g, Side::differential, rng.rat_vector(fd, 5, 3));

            auto alpha_d = dual_lift(alpha, alpha * u[i]);
            auto a_d = dual_lift(base_a,
                                 v[i] + a_conn * u[i] - u[i] * a_conn + u[i].derivative());

            auto moved = gauge_act(ConnPointT<Dual>{alpha_d, a_d}, g_dual);
            v_img[i] = dual_eps(moved.A - connection_of(moved.alpha));
            u_img[i] = dual_real(moved.alpha).unimodular_inverse() * dual_eps(moved.alpha);

            auto theta_d = a_d - connection_of(alpha_d);
            v_img_c[i] = dual_eps(corrupt_theta(alpha_d, theta_d, g_dual));
        }

        Rat expect = res_tr(u[0], v[1]) - res_tr(u[1], v[0]);
        Rat got = res_tr(u_img[0], v_img[1]) - res_tr(u_img[1], v_img[0]);
        Rat got_c = res_tr(u_img[0], v_img_c[1]) - res_tr(u_img[1], v_img_c[0]);
        if (got != expect) {
            ++rep.failures;
            if (rep.witness.empty()) {
                std::ostringstream os;
                os << "trial " << trial << ": pullback " << rat_to_string(got)
                   << " != " << rat_to_string(expect);
                rep.witness = os.str();
            }
        }
        if (got_c != expect)
            ++rep.control_failures;
    }
    rep.negative_control_failed = rep.control_failures > 0;
    rep.pass = (rep.failures == 0);
    return rep;
}

}  // namespace loopform
