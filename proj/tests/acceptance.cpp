// Acceptance gate: one check per criterion, exact (zero-tolerance),
// with a pass/fail line and timing for each.

#include <loopform/liouville.hpp>
#include <loopform/moduli.hpp>
#include <loopform/p1.hpp>
#include <loopform/rng.hpp>
#include <loopform/scenario.hpp>
#include <loopform/window.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace loopform;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
        ok = body();
    } catch (const std::exception& e) {
        err = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << " ("
              << ms << " ms)";
    if (!err.empty())
        std::cout << " [error: " << err << "]";
    std::cout << std::endl;
    if (!ok)
        ++failures;
}

bool duality_case(const SplitBundle& bundle, const MarkedCurve& curve, const LieAlgebra& g,
                  int N, int m, int gamma, int eta, int window) {
    auto r = verify_duality(bundle, curve, g, N, m);
    return r.pass && r.gamma_dim == gamma && r.eta_dim == eta && r.window_dim == window &&
           r.mutual_annihilators && r.dims_add_up && r.vanishing_conditions;
}

}  // namespace

int main() {
    LieAlgebra sl2 = LieAlgebra::sl(2);
    LieAlgebra sl3 = LieAlgebra::sl(3);
    SplitBundle triv2 = SplitBundle::trivial(2);

    criterion(1, "residue duality, sl(2) trivial, 1 point, N=m=3 (12+6=18)", [&] {
        MarkedCurve curve{{MarkedPoint::at(Rat(0))}};
        return duality_case(triv2, curve, sl2, 3, 3, 12, 6, 18);
    });

    criterion(2, "multi-point duality, points {0,1}, N=m=2 (15+9=24)", [&] {
        MarkedCurve curve{{MarkedPoint::at(Rat(0)), MarkedPoint::at(Rat(1))}};
        return duality_case(triv2, curve, sl2, 2, 2, 15, 9, 24);
    });

    criterion(3, "twisted duality, splitting (1,-1) at infinity, N=m=3 (12+6=18)", [&] {
        MarkedCurve curve{{MarkedPoint::infinity()}};
        SplitBundle tw{2, {1, -1}};
        return duality_case(tw, curve, sl2, 3, 3, 12, 6, 18);
    });

    criterion(4, "bounded annihilator, k in {1,2,3}", [&] {
        for (int k = 1; k <= 3; ++k) {
            auto r = bounded_annihilator_check(k, TruncationWindow{1, k + 1, k + 2}, sl2);
            if (!r.pass)
                return false;
        }
        return true;
    });

    criterion(5, "Serre compatibility, 50 seeded pairs at (3,3), 1 and 2 points", [&] {
        // Sign pin: B([X x], Y dx/x^2) = (X, Y).
        MarkedCurve pin_curve{{MarkedPoint::at(Rat(0))}};
        for (int b1 = 0; b1 < sl2.dim(); ++b1)
            for (int b2 = 0; b2 < sl2.dim(); ++b2) {
                CechClass cl;
                cl.alg = &sl2;
                cl.m = 2;
                cl.comp.resize(sl2.dim());
                cl.comp[b1][1] = 1;
                AdSection tau(&sl2, true);
                tau.comp[b2] = RatFunc(Poly::constant(1), Poly::monomial(2, Rat(1)));
                if (serre_pairing(cl, tau, triv2, pin_curve, sl2) !=
                    sl2.killing_gram().at(b1, b2))
                    return false;
            }
        MarkedCurve one{{MarkedPoint::at(Rat(0))}};
        MarkedCurve two{{MarkedPoint::at(Rat(0)), MarkedPoint::at(Rat(1))}};
        auto r1 = verify_compatibility(triv2, one, sl2, 3, 3, 50, 2024);
        auto r2 = verify_compatibility(triv2, two, sl2, 3, 3, 50, 2025);
        return r1.pass && r2.pass;
    });

    criterion(6, "linear reduction vs brute-force radical, 50 random forms", [&] {
        Rng rng(777);
        for (int trial = 0; trial < 50; ++trial) {
            int dim = rng.uniform_int(2, 12);
            Matrix a(dim, dim);
            for (int i = 0; i < dim; ++i)
                for (int j = i + 1; j < dim; ++j) {
                    a.at(i, j) = rng.small_rat(5, 3);
                    a.at(j, i) = -a.at(i, j);
                }
            std::vector<std::vector<Rat>> rows;
            int r = rng.uniform_int(0, dim);
            for (int i = 0; i < r; ++i)
                rows.push_back(rng.rat_vector(dim, 5, 3));
            Subspace v2 = Subspace::span(dim, Matrix::from_rows(rows));
            Reduction red = reduce(FormMatrix(FormKind::alternating, a), v2);
            Subspace oracle =
                subspace_intersect(v2, Subspace::span(dim, kernel(v2.basis() * a)));
            if (!(red.radical == oracle))
                return false;
            if (rank(red.reduced.entries) != v2.dim() - red.radical.dim())
                return false;
        }
        return true;
    });

    criterion(7, "gauge right-action axiom and cocycle rule, 20 random pairs", [&] {
        Rng rng(4242);
        auto alpha = MatrixLaurent<Rat>::torus({1, -1});
        TruncationWindow w{1, 3, 3};
        int fd = window_dim(w, sl2);
        auto rand_poly = [&] {
            ScalarLaurent<Rat> p;
            for (int e = 0; e >= -2; --e)
                p.add(e, rng.small_rat(3, 2));
            return p;
        };
        auto rand_g = [&] {
            auto u = MatrixLaurent<Rat>::identity(2);
            u.at(0, 1) = rand_poly();
            auto l = MatrixLaurent<Rat>::identity(2);
            l.at(1, 0) = rand_poly();
            return u * l;
        };
        for (int trial = 0; trial < 20; ++trial) {
            auto theta = to_matrix_laurent(
                window_extract(w, sl2, Side::differential, rng.rat_vector(fd, 3, 2), 0));
            ConnPoint pt{alpha, connection_of(alpha) + theta};
            auto g = rand_g();
            auto h = rand_g();
            auto lhs = gauge_act(gauge_act(pt, g), h);
            auto rhs = gauge_act(pt, g * h);
            if (!(lhs.alpha == rhs.alpha) || !(lhs.A == rhs.A))
                return false;
            auto gi = g.unimodular_inverse();
            if (!(connection_of(alpha * g) ==
                  gi * connection_of(alpha) * g + gi * g.derivative()))
                return false;
        }
        return true;
    });

    criterion(8, "symplectic preservation + failing negative control, 3 gauge samples", [&] {
        auto alpha = MatrixLaurent<Rat>::identity(2);
        TruncationWindow w{1, 3, 3};
        auto x = ScalarLaurent<Rat>::monomial(-1, Rat(1));
        auto elem = [&](int i, int j, const ScalarLaurent<Rat>& p) {
            auto m = MatrixLaurent<Rat>::identity(2);
            m.at(i, j) = p;
            return m;
        };
        std::vector<MatrixLaurent<Rat>> samples = {elem(0, 1, x), elem(1, 0, x * x),
                                                   elem(0, 1, x) * elem(1, 0, x * x)};
        for (std::size_t i = 0; i < samples.size(); ++i) {
            auto r = gauge_symplecto_check(alpha, samples[i], sl2, w, 20, 9000 + i);
            if (!r.pass || !r.negative_control_failed)
                return false;
        }
        return true;
    });

    criterion(9, "theorem models: radical = orbit(+framing), reduced form full-rank", [&] {
        TruncationWindow w{1, 3, 3};
        SplitBundle split{2, {1, -1}};
        for (const auto& [bundle, alpha] :
             {std::pair{triv2, MatrixLaurent<Rat>::identity(2)},
              std::pair{split, MatrixLaurent<Rat>::torus({1, -1})}}) {
            for (ModelKind kind : {ModelKind::higgs, ModelKind::conn}) {
                auto r = reduced_form_report(kind, 1, alpha, bundle, sl2, w);
                if (!r.pass)
                    return false;
            }
            for (ModelKind kind : {ModelKind::higgs_bounded, ModelKind::conn_bounded})
                for (int k = 1; k <= 2; ++k) {
                    auto r = reduced_form_report(kind, k, alpha, bundle, sl2, w);
                    if (!r.pass)
                        return false;
                }
        }
        return true;
    });

    criterion(10, "loop-form nondegeneracy on windows up to (4,4), sl(2) and sl(3)", [&] {
        for (const LieAlgebra* g : {&sl2, &sl3}) {
            for (int N = 1; N <= 4; ++N)
                for (int m = 1; m <= 4; ++m) {
                    Matrix gram = residue_gram(TruncationWindow{1, N, m}, *g);
                    if (rank(gram) != gram.rows())
                        return false;
                }
            for (int S = 0; S <= 4; ++S) {
                Matrix gram = loop_gram(S, *g);
                if (rank(gram) != gram.rows())
                    return false;
            }
        }
        return true;
    });

    if (failures == 0) {
        std::cout << "all 10 acceptance criteria passed" << std::endl;
        return 0;
    }
    std::cout << failures << " acceptance criteria FAILED" << std::endl;
    return 1;
}
