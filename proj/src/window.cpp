#include <loopform/window.hpp>

#include <sstream>
#include <stdexcept>

namespace loopform {

int window_exp_low(const TruncationWindow& w, Side side) {
    return side == Side::function ? -w.N : -w.m;
}

int window_exp_high(const TruncationWindow& w, Side side) {
    return side == Side::function ? w.m - 1 : w.N - 1;
}

int window_dim(const TruncationWindow& w, const LieAlgebra& g) {
    return w.npts * (w.N + w.m) * g.dim();
}

int window_index(const TruncationWindow& w, const LieAlgebra& g, Side side,
                 int point, int exp, int b) {
    int lo = window_exp_low(w, side);
    int hi = window_exp_high(w, side);
    if (point < 0 || point >= w.npts || exp < lo || exp > hi || b < 0 || b >= g.dim())
        throw std::out_of_range("window coordinate out of range");
    return (point * (w.N + w.m) + (exp - lo)) * g.dim() + b;
}

std::vector<Rat> window_embed(const TruncationWindow& w, const LieAlgebra& g,
                              const std::vector<GLaurent>& tuple) {
    if (int(tuple.size()) != w.npts)
        throw std::invalid_argument("tuple length differs from window point count");
    Side side = tuple.empty() || !tuple[0].is_differential() ? Side::function
                                                            : Side::differential;
    int lo = window_exp_low(w, side);
    int hi = window_exp_high(w, side);
    std::vector<Rat> v(window_dim(w, g));
    for (int i = 0; i < w.npts; ++i) {
        if ((tuple[i].is_differential() ? Side::differential : Side::function) != side)
            throw std::invalid_argument("mixed sides in window tuple");
        for (const auto& [e, coeff] : tuple[i].coeffs()) {
            if (e < lo)
                throw std::invalid_argument("pole deeper than the window");
            if (e > hi)
                continue;  // regular tail beyond the slice
            for (int b = 0; b < g.dim(); ++b)
                v[window_index(w, g, side, i, e, b)] = coeff[b];
        }
    }
    return v;
}

GLaurent window_extract(const TruncationWindow& w, const LieAlgebra& g, Side side,
                        const std::vector<Rat>& v, int point) {
    if (int(v.size()) != window_dim(w, g))
        throw std::invalid_argument("vector length differs from window dimension");
    GLaurent x(&g, side == Side::differential);
    for (int e = window_exp_low(w, side); e <= window_exp_high(w, side); ++e) {
        GElement coeff(g.dim());
        for (int b = 0; b < g.dim(); ++b)
            coeff[b] = v[window_index(w, g, side, point, e, b)];
        x.add_term(e, coeff);
    }
    return x;
}

Rat residue_pairing(const std::vector<GLaurent>& x, const std::vector<GLaurent>& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("residue pairing tuple length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_differential() || !y[i].is_differential())
            throw std::invalid_argument("residue pairing needs (function, differential)");
        if (x[i].algebra() != y[i].algebra())
            throw std::invalid_argument("residue pairing algebra mismatch");
        const LieAlgebra& g = *x[i].algebra();
        for (const auto& [a, xa] : x[i].coeffs()) {
            auto yb = y[i].coeffs().find(-1 - a);
            if (yb != y[i].coeffs().end())
                s += g.killing(xa, yb->second);
        }
    }
    return s;
}

Rat loop_form(const GLaurent& x, const GLaurent& y) {
    if (x.is_differential() || y.is_differential())
        throw std::invalid_argument("loop form is defined on function-side values");
    if (x.algebra() != y.algebra())
        throw std::invalid_argument("loop form algebra mismatch");
    const LieAlgebra& g = *x.algebra();
    Rat s = 0;
    for (const auto& [a, xa] : x.coeffs()) {
        auto yb = y.coeffs().find(-a);
        if (yb != y.coeffs().end())
            s += g.killing(xa, yb->second);
    }
    return s;
}

Matrix residue_gram(const TruncationWindow& w, const LieAlgebra& g) {
    Matrix p(window_dim(w, g), window_dim(w, g));
    for (int i = 0; i < w.npts; ++i)
        for (int a = -w.N; a <= w.m - 1; ++a) {
            int c = -1 - a;  // Res pairs t^a with t^c dt when a + c = -1
            for (int b1 = 0; b1 < g.dim(); ++b1)
                for (int b2 = 0; b2 < g.dim(); ++b2) {
                    const Rat& k = g.killing_gram().at(b1, b2);
                    if (k != 0)
                        p.at(window_index(w, g, Side::function, i, a, b1),
                             window_index(w, g, Side::differential, i, c, b2)) = k;
                }
        }
    return p;
}

Matrix loop_gram(int S, const LieAlgebra& g) {
    if (S < 0)
        throw std::invalid_argument("loop form range must be nonnegative");
    int dim = (2 * S + 1) * g.dim();
    auto idx = [&](int a, int b) { return (a + S) * g.dim() + b; };
    Matrix p(dim, dim);
    for (int a = -S; a <= S; ++a)
        for (int b1 = 0; b1 < g.dim(); ++b1)
            for (int b2 = 0; b2 < g.dim(); ++b2) {
                const Rat& k = g.killing_gram().at(b1, b2);
                if (k != 0)
                    p.at(idx(a, b1), idx(-a, b2)) = k;
            }
    return p;
}

WindowSubspace window_annihilator(const WindowSubspace& s, const LieAlgebra& g) {
    Matrix gram = residue_gram(s.window, g);
    WindowSubspace out;
    out.window = s.window;
    out.side = s.side == Side::function ? Side::differential : Side::function;
    if (s.side == Side::function) {
        out.space = annihilator(gram, s.space);
    } else {
        out.space = annihilator(gram.transpose(), s.space);
    }
    return out;
}

BoundedAnnihilatorReport bounded_annihilator_check(int k, const TruncationWindow& w,
                                                   const LieAlgebra& g) {
    if (k < 1)
        throw std::invalid_argument("framing order must be >= 1");
    if (w.npts != 1 || w.N < k + 1 || w.m < k + 1)
        throw std::invalid_argument(
            "window too small to represent the bounded annihilator statement");

    // t^k g[[t]] within the function window: exponents k .. m-1.
    std::vector<std::vector<Rat>> rows;
    for (int e = k; e <= w.m - 1; ++e)
        for (int b = 0; b < g.dim(); ++b) {
            std::vector<Rat> v(window_dim(w, g));
            v[window_index(w, g, Side::function, 0, e, b)] = 1;
            rows.push_back(v);
        }
    WindowSubspace s{w, Side::function,
                     Subspace::span(window_dim(w, g), Matrix::from_rows(rows))};

    auto ann = window_annihilator(s, g);

    // Expected: t^{-k} g[[t]] dt within the window: exponents -k .. N-1.
    std::vector<std::vector<Rat>> exp_rows;
    for (int e = -k; e <= w.N - 1; ++e)
        for (int b = 0; b < g.dim(); ++b) {
            std::vector<Rat> v(window_dim(w, g));
            v[window_index(w, g, Side::differential, 0, e, b)] = 1;
            exp_rows.push_back(v);
        }
    Subspace expected = Subspace::span(window_dim(w, g), Matrix::from_rows(exp_rows));

    BoundedAnnihilatorReport r;
    r.subspace_dim = s.space.dim();
    r.annihilator_dim = ann.space.dim();
    r.expected_dim = expected.dim();
    r.window_dim = window_dim(w, g);
    r.pass = (ann.space == expected);
    std::ostringstream d;
    d << "k=" << k << " dim(t^k g[[t]] cap window)=" << r.subspace_dim
      << " dim(ann)=" << r.annihilator_dim << " expected=" << r.expected_dim
      << " window=" << r.window_dim;
    r.detail = d.str();
    return r;
}

}  // namespace loopform
