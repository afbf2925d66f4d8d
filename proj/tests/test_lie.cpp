#include <doctest.h>

#include <loopform/lie.hpp>
#include <loopform/rng.hpp>

using namespace loopform;

TEST_CASE("sl(2) structure: dimension, bracket, trace form") {
    LieAlgebra g = LieAlgebra::sl(2);
    CHECK(g.dim() == 3);
    // Basis order: off-diagonal E_ij row-major, then the Cartan.
    GElement e{Rat(1), Rat(0), Rat(0)};
    GElement f{Rat(0), Rat(1), Rat(0)};
    GElement h{Rat(0), Rat(0), Rat(1)};
    CHECK(g.bracket(e, f) == h);
    // [h, e] = 2e, [h, f] = -2f
    CHECK(g.bracket(h, e) == GElement{Rat(2), Rat(0), Rat(0)});
    CHECK(g.bracket(h, f) == GElement{Rat(0), Rat(-2), Rat(0)});
    CHECK(g.killing(e, f) == Rat(1));
    CHECK(g.killing(h, h) == Rat(2));
    CHECK(g.killing(e, e) == Rat(0));
    CHECK(g.killing(e, h) == Rat(0));
}

TEST_CASE("killing gram matches the pairwise trace form") {
    for (int n : {2, 3}) {
        LieAlgebra g = LieAlgebra::sl(n);
        CHECK(g.dim() == n * n - 1);
        for (int i = 0; i < g.dim(); ++i)
            for (int j = 0; j < g.dim(); ++j) {
                GElement a(g.dim()), b(g.dim());
                a[i] = 1;
                b[j] = 1;
                CHECK(g.killing_gram().at(i, j) == g.killing(a, b));
            }
        CHECK(rank(g.killing_gram()) == g.dim());
    }
}

TEST_CASE("coords_of inverts matrix_of") {
    Rng rng(21);
    for (int n : {2, 3}) {
        LieAlgebra g = LieAlgebra::sl(n);
        for (int trial = 0; trial < 10; ++trial) {
            GElement x = rng.rat_vector(g.dim(), 4, 3);
            CHECK(g.coords_of(g.matrix_of(x)) == x);
        }
    }
}

TEST_CASE("Jacobi identity and bracket antisymmetry") {
    Rng rng(22);
    for (int n : {2, 3}) {
        LieAlgebra g = LieAlgebra::sl(n);
        for (int trial = 0; trial < 8; ++trial) {
            GElement x = rng.rat_vector(g.dim(), 3, 2);
            GElement y = rng.rat_vector(g.dim(), 3, 2);
            GElement z = rng.rat_vector(g.dim(), 3, 2);
            auto add = [](GElement a, const GElement& b) {
                for (std::size_t i = 0; i < a.size(); ++i)
                    a[i] += b[i];
                return a;
            };
            GElement jac = add(add(g.bracket(x, g.bracket(y, z)),
                                   g.bracket(y, g.bracket(z, x))),
                               g.bracket(z, g.bracket(x, y)));
            CHECK(jac == GElement(g.dim(), Rat(0)));
            GElement anti = add(g.bracket(x, y), g.bracket(y, x));
            CHECK(anti == GElement(g.dim(), Rat(0)));
        }
    }
}

TEST_CASE("trace form is ad-invariant") {
    Rng rng(23);
    for (int n : {2, 3}) {
        LieAlgebra g = LieAlgebra::sl(n);
        for (int trial = 0; trial < 8; ++trial) {
            GElement x = rng.rat_vector(g.dim(), 3, 2);
            GElement y = rng.rat_vector(g.dim(), 3, 2);
            GElement z = rng.rat_vector(g.dim(), 3, 2);
            CHECK(g.killing(g.bracket(x, y), z) + g.killing(y, g.bracket(x, z)) == Rat(0));
        }
    }
}

TEST_CASE("ad_conjugate is an algebra map preserving the form") {
    Rng rng(24);
    LieAlgebra g = LieAlgebra::sl(2);
    Matrix u = Matrix::from_rows({{Rat(1), Rat(3)}, {Rat(1), Rat(4)}});  // det 1
    for (int trial = 0; trial < 8; ++trial) {
        GElement x = rng.rat_vector(g.dim(), 3, 2);
        GElement y = rng.rat_vector(g.dim(), 3, 2);
        GElement cx = g.ad_conjugate(u, x);
        GElement cy = g.ad_conjugate(u, y);
        CHECK(g.killing(cx, cy) == g.killing(x, y));
        CHECK(g.bracket(cx, cy) == g.ad_conjugate(u, g.bracket(x, y)));
    }
    CHECK(g.ad_conjugate(Matrix::identity(2), GElement{Rat(1), Rat(2), Rat(3)}) ==
          GElement{Rat(1), Rat(2), Rat(3)});
}

TEST_CASE("structure constants reproduce the bracket") {
    LieAlgebra g = LieAlgebra::sl(3);
    Rng rng(25);
    GElement x = rng.rat_vector(g.dim(), 3, 2);
    GElement y = rng.rat_vector(g.dim(), 3, 2);
    GElement via_structure(g.dim(), Rat(0));
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            for (int k = 0; k < g.dim(); ++k)
                via_structure[k] += g.structure(i, j, k) * x[i] * y[j];
    CHECK(via_structure == g.bracket(x, y));
}

TEST_CASE("sl(n) rejects n < 2") {
    CHECK_THROWS(LieAlgebra::sl(1));
    CHECK_THROWS(LieAlgebra::sl(0));
}
