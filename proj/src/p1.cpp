#include <loopform/p1.hpp>
#include <loopform/rng.hpp>

#include <set>
#include <sstream>
#include <stdexcept>

namespace loopform {

namespace {

// Rational function from Laurent-polynomial coefficients in (x - q).
RatFunc ratfunc_from_laurent_at(const Rat& q, const std::map<int, Rat>& coeffs) {
    if (coeffs.empty())
        return RatFunc();
    int low = coeffs.begin()->first;
    int shift = low < 0 ? -low : 0;
    Poly num;
    Poly root = Poly::linear_root(q);
    for (const auto& [e, v] : coeffs)
        num = num + poly_pow(root, e + shift) * v;
    return RatFunc(num, poly_pow(root, shift));
}

// Solves for M * R with R a Laurent polynomial in (x - q), exponents in
// [-N, m-1], such that the jet of M * R at q equals J modulo (x-q)^m.
// M must be a unit at q and J supported in [-N, m-1].
RatFunc solve_block_at(const Rat& q, const std::map<int, Rat>& jet, const RatFunc& M,
                       int N, int m) {
    if (jet.empty())
        return RatFunc();
    int val = jet.begin()->first;
    if (val < -N)
        throw std::invalid_argument("jet deeper than allowed pole order");
    int terms = m - val;
    auto mser = M.expand_at(q, terms);
    if (mser.empty() || mser.begin()->first != 0)
        throw std::logic_error("lift multiplier is not a unit at the point");
    auto minv = series_inverse(mser, terms);
    auto r = series_mul(jet, minv, -N, m - 1);
    return M * ratfunc_from_laurent_at(q, r);
}

RatFunc vanish_factor(const std::vector<Rat>& points, int m) {
    Poly p = Poly::constant(1);
    for (const auto& q : points)
        p = p * poly_pow(Poly::linear_root(q), m);
    return RatFunc(p, Poly::constant(1));
}

}  // namespace

bool MarkedCurve::has_infinity() const {
    for (const auto& p : points)
        if (p.infinite)
            return true;
    return false;
}

std::vector<Rat> MarkedCurve::finite_points() const {
    std::vector<Rat> v;
    for (const auto& p : points)
        if (!p.infinite)
            v.push_back(p.q);
    return v;
}

void MarkedCurve::validate() const {
    if (points.empty())
        throw std::invalid_argument("curve needs at least one marked point");
    int inf = 0;
    std::set<Rat> seen;
    for (const auto& p : points) {
        if (p.infinite)
            ++inf;
        else if (!seen.insert(p.q).second)
            throw std::invalid_argument("marked points must be distinct");
    }
    if (inf > 1)
        throw std::invalid_argument("marked points must be distinct");
}

SplitBundle SplitBundle::trivial(int n) {
    SplitBundle b;
    b.n = n;
    b.splitting.assign(n, 0);
    return b;
}

void SplitBundle::validate() const {
    if (int(splitting.size()) != n)
        throw std::invalid_argument("splitting length differs from rank");
    int sum = 0;
    for (std::size_t i = 0; i < splitting.size(); ++i) {
        sum += splitting[i];
        if (i + 1 < splitting.size() && splitting[i] < splitting[i + 1])
            throw std::invalid_argument("splitting must be non-increasing");
    }
    if (sum != 0)
        throw std::invalid_argument("splitting must sum to zero (SL(n))");
}

int summand_degree(const SplitBundle& bundle, const LieAlgebra& g, int b) {
    bundle.validate();
    if (g.n() != bundle.n)
        throw std::invalid_argument("bundle rank differs from algebra rank");
    const Matrix& mat = g.basis()[b];
    bool found = false;
    int deg = 0;
    for (int i = 0; i < mat.rows(); ++i)
        for (int j = 0; j < mat.cols(); ++j) {
            if (mat.at(i, j) == 0)
                continue;
            int d = bundle.splitting[i] - bundle.splitting[j];
            if (found && d != deg)
                throw std::logic_error("Lie basis not adapted to the torus twist");
            deg = d;
            found = true;
        }
    return deg;
}

AdSection AdSection::operator+(const AdSection& o) const {
    if (alg != o.alg || differential != o.differential)
        throw std::invalid_argument("AdSection mismatch in +");
    AdSection r = *this;
    for (std::size_t i = 0; i < comp.size(); ++i)
        r.comp[i] = r.comp[i] + o.comp[i];
    return r;
}

AdSection AdSection::operator*(const Rat& s) const {
    AdSection r = *this;
    for (auto& c : r.comp)
        c = c * s;
    return r;
}

std::vector<AdSection> section_basis(const SplitBundle& bundle, const MarkedCurve& curve,
                                     const LieAlgebra& g, Side side, int j) {
    curve.validate();
    bundle.validate();
    if (j < 0)
        throw std::invalid_argument("pole multiplicity must be >= 0");
    auto fin = curve.finite_points();
    int j_inf = curve.has_infinity() ? j : 0;
    Poly denom = Poly::constant(1);
    for (const auto& q : fin)
        denom = denom * poly_pow(Poly::linear_root(q), j);

    std::vector<AdSection> basis;
    for (int b = 0; b < g.dim(); ++b) {
        int d = summand_degree(bundle, g, b);
        int maxdeg = int(fin.size()) * j + j_inf + d - (side == Side::differential ? 2 : 0);
        for (int s = 0; s <= maxdeg; ++s) {
            AdSection sec(&g, side == Side::differential);
            sec.comp[b] = RatFunc(Poly::monomial(s, Rat(1)), denom);
            basis.push_back(std::move(sec));
        }
    }
    return basis;
}

std::vector<Rat> expand_section(const AdSection& s, const SplitBundle& bundle,
                                const MarkedCurve& curve, const TruncationWindow& w) {
    curve.validate();
    if (int(curve.points.size()) != w.npts)
        throw std::invalid_argument("window point count differs from curve");
    const LieAlgebra& g = *s.alg;
    Side side = s.differential ? Side::differential : Side::function;
    int hi = window_exp_high(w, side);

    std::vector<GLaurent> tuple;
    for (const auto& p : curve.points) {
        GLaurent local(&g, s.differential);
        for (int b = 0; b < g.dim(); ++b) {
            if (s.comp[b].is_zero())
                continue;
            GElement unit(g.dim());
            unit[b] = 1;
            if (!p.infinite) {
                for (const auto& [e, v] : s.comp[b].expand_at(p.q, hi)) {
                    GElement coeff = unit;
                    coeff[b] = v;
                    local.add_term(e, coeff);
                }
            } else {
                // Disc coordinates: twist by t^{deg} and dx = -t^{-2} dt.
                int d = summand_degree(bundle, g, b);
                if (!s.differential) {
                    for (const auto& [e, v] : s.comp[b].expand_at_infinity(hi - d)) {
                        GElement coeff = unit;
                        coeff[b] = v;
                        local.add_term(e + d, coeff);
                    }
                } else {
                    for (const auto& [e, v] : s.comp[b].expand_at_infinity(hi + 2 - d)) {
                        GElement coeff = unit;
                        coeff[b] = -v;
                        local.add_term(e + d - 2, coeff);
                    }
                }
            }
        }
        tuple.push_back(std::move(local));
    }
    return window_embed(w, g, tuple);
}

Subspace gamma_image(const SplitBundle& bundle, const MarkedCurve& curve,
                     const LieAlgebra& g, const TruncationWindow& w, int N) {
    if (N > w.N)
        throw std::invalid_argument("window shallower than the requested pole order");
    auto basis = section_basis(bundle, curve, g, Side::function, N);
    std::vector<std::vector<Rat>> rows;
    rows.reserve(basis.size());
    for (const auto& s : basis)
        rows.push_back(expand_section(s, bundle, curve, w));
    return Subspace::span(window_dim(w, g), Matrix::from_rows(rows));
}

Subspace eta_image(const SplitBundle& bundle, const MarkedCurve& curve,
                   const LieAlgebra& g, const TruncationWindow& w, int j) {
    if (j > w.m)
        throw std::invalid_argument("window shallower than the requested pole order");
    auto basis = section_basis(bundle, curve, g, Side::differential, j);
    std::vector<std::vector<Rat>> rows;
    rows.reserve(basis.size());
    for (const auto& s : basis)
        rows.push_back(expand_section(s, bundle, curve, w));
    return Subspace::span(window_dim(w, g), Matrix::from_rows(rows));
}

bool CechClass::is_zero() const {
    for (const auto& c : comp)
        if (!c.empty())
            return false;
    return true;
}

std::pair<int, int> cech_monomial_range(const SplitBundle& bundle, const MarkedCurve& curve,
                                        const LieAlgebra& g, int m, int b) {
    int d = summand_degree(bundle, g, b);
    int fin_nonzero = 0;
    bool zero_marked = false;
    for (const auto& p : curve.points) {
        if (p.infinite)
            continue;
        if (p.q == 0)
            zero_marked = true;
        else
            ++fin_nonzero;
    }
    int alpha = zero_marked ? m : 0;  // U0-coboundaries: exponents >= alpha
    int beta = d - (curve.has_infinity() ? m : 0) - m * fin_nonzero;  // U1: <= beta
    return {beta + 1, alpha - 1};
}

int cech_dim(const SplitBundle& bundle, const MarkedCurve& curve, const LieAlgebra& g,
             int m) {
    int total = 0;
    for (int b = 0; b < g.dim(); ++b) {
        auto [lo, hi] = cech_monomial_range(bundle, curve, g, m, b);
        total += std::max(0, hi - lo + 1);
    }
    return total;
}

std::vector<CechClass> cech_h1_basis(const SplitBundle& bundle, const MarkedCurve& curve,
                                     const LieAlgebra& g, int m) {
    std::vector<CechClass> basis;
    for (int b = 0; b < g.dim(); ++b) {
        auto [lo, hi] = cech_monomial_range(bundle, curve, g, m, b);
        for (int j = lo; j <= hi; ++j) {
            CechClass c;
            c.alg = &g;
            c.m = m;
            c.comp.resize(g.dim());
            c.comp[b][j] = 1;
            basis.push_back(std::move(c));
        }
    }
    return basis;
}

CechClass connecting_delta(const std::vector<Rat>& w, const SplitBundle& bundle,
                           const MarkedCurve& curve, const LieAlgebra& g, int N, int m) {
    curve.validate();
    bundle.validate();
    TruncationWindow win{int(curve.points.size()), N, m};
    if (int(w.size()) != window_dim(win, g))
        throw std::invalid_argument("jet vector length differs from window dimension");

    auto fin = curve.finite_points();
    bool inf_marked = curve.has_infinity();

    // Per-point scalar jets for each Lie direction.
    std::vector<GLaurent> jets;
    for (int i = 0; i < win.npts; ++i)
        jets.push_back(window_extract(win, g, Side::function, w, i));

    std::vector<Rat> fin_nonzero;
    for (const auto& q : fin)
        if (q != 0)
            fin_nonzero.push_back(q);

    CechClass out;
    out.alg = &g;
    out.m = m;
    out.comp.resize(g.dim());

    RatFunc pi_prime = vanish_factor(fin_nonzero, m);

    for (int b = 0; b < g.dim(); ++b) {
        int d = summand_degree(bundle, g, b);

        auto jet_of = [&](int point) {
            std::map<int, Rat> jet;
            for (const auto& [e, coeff] : jets[point].coeffs())
                if (coeff[b] != 0)
                    jet[e] = coeff[b];
            return jet;
        };

        // Chart U0 = A^1: lift matching the jets at every finite marked
        // point; no condition at infinity.
        RatFunc s0;
        for (int i = 0; i < win.npts; ++i) {
            const auto& p = curve.points[i];
            if (p.infinite)
                continue;
            auto jet = jet_of(i);
            if (jet.empty())
                continue;
            std::vector<Rat> others;
            for (const auto& q : fin)
                if (q != p.q)
                    others.push_back(q);
            s0 = s0 + solve_block_at(p.q, jet, vanish_factor(others, m), N, m);
        }

        // Chart U1 = P^1 \ {0}: lift matching jets at marked points away
        // from 0, regular at infinity for the twisted bundle (poles at 0
        // are free in this chart).
        RatFunc s1;
        for (int i = 0; i < win.npts; ++i) {
            const auto& p = curve.points[i];
            if (p.infinite || p.q == 0)
                continue;
            auto jet = jet_of(i);
            if (jet.empty())
                continue;
            std::vector<Rat> others;
            for (const auto& q : fin_nonzero)
                if (q != p.q)
                    others.push_back(q);
            int deg_cap = d - (inf_marked ? m : 0);
            int p_shift = std::max(0, int(others.size()) * m + (m - 1) - deg_cap);
            RatFunc mult = vanish_factor(others, m) /
                           RatFunc(Poly::monomial(p_shift, Rat(1)), Poly::constant(1));
            s1 = s1 + solve_block_at(p.q, jet, mult, N, m);
        }
        if (inf_marked) {
            int inf_idx = -1;
            for (int i = 0; i < win.npts; ++i)
                if (curve.points[i].infinite)
                    inf_idx = i;
            auto jet = jet_of(inf_idx);
            if (!jet.empty()) {
                // Solve t^d * Pi'(1/t) * g(1/t) = jet (mod t^m) with g a
                // Laurent polynomial in x.
                int cnt = int(fin_nonzero.size());
                std::map<int, Rat> unit;  // Pi'(1/t) * t^{cnt*m}, a unit in t
                {
                    Poly u = Poly::constant(1);
                    for (const auto& q : fin_nonzero)
                        u = u * poly_pow(Poly({Rat(1), -q}), m);  // (1 - q t)^m
                    for (int i = 0; i <= u.degree(); ++i)
                        if (u.coeff(i) != 0)
                            unit[i] = u.coeff(i);
                }
                int c = cnt * m - d;
                int val = jet.begin()->first;
                int terms = (c + m) - (val + c);  // series precision in t
                auto uinv = series_inverse(unit, std::max(terms, 1) + m + win.N);
                std::map<int, Rat> shifted;  // t^c * jet
                for (const auto& [e, v] : jet)
                    shifted[e + c] = v;
                auto gser = series_mul(shifted, uinv, val + c, c + m - 1);
                std::map<int, Rat> g_x;  // g(x) = sum g_k x^{-k}
                for (const auto& [e, v] : gser)
                    g_x[-e] = v;
                s1 = s1 + pi_prime * ratfunc_from_laurent_at(Rat(0), g_x);
            }
        }

        RatFunc cocycle = s0 - s1;
        if (cocycle.is_zero())
            continue;
        RatFunc reduced = cocycle / pi_prime;
        std::map<int, Rat> laur;
        if (!reduced.as_laurent(laur))
            throw std::logic_error("Cech cocycle is not divisible by the vanishing factor");
        auto [lo, hi] = cech_monomial_range(bundle, curve, g, m, b);
        for (const auto& [e, v] : laur)
            if (e >= lo && e <= hi)
                out.comp[b][e] = v;
    }
    return out;
}

std::vector<Rat> cech_coords(const CechClass& c, const SplitBundle& bundle,
                             const MarkedCurve& curve, const LieAlgebra& g) {
    std::vector<Rat> v;
    for (int b = 0; b < g.dim(); ++b) {
        auto [lo, hi] = cech_monomial_range(bundle, curve, g, c.m, b);
        for (int j = lo; j <= hi; ++j) {
            auto it = c.comp[b].find(j);
            v.push_back(it == c.comp[b].end() ? Rat(0) : it->second);
        }
    }
    return v;
}

Matrix delta_matrix(const SplitBundle& bundle, const MarkedCurve& curve,
                    const LieAlgebra& g, int N, int m) {
    TruncationWindow win{int(curve.points.size()), N, m};
    int wd = window_dim(win, g);
    int cd = cech_dim(bundle, curve, g, m);
    Matrix mat(cd, wd);
    for (int col = 0; col < wd; ++col) {
        std::vector<Rat> e(wd);
        e[col] = 1;
        auto coords = cech_coords(connecting_delta(e, bundle, curve, g, N, m), bundle,
                                  curve, g);
        for (int row = 0; row < cd; ++row)
            mat.at(row, col) = coords[row];
    }
    return mat;
}

Rat serre_pairing(const CechClass& c, const AdSection& tau, const SplitBundle& bundle,
                  const MarkedCurve& curve, const LieAlgebra& g) {
    if (!tau.differential)
        throw std::invalid_argument("Serre pairing needs a differential-side section");
    if (tau.alg != &g || c.alg != &g)
        throw std::invalid_argument("Serre pairing algebra mismatch");
    std::vector<Rat> fin_nonzero;
    for (const auto& q : curve.finite_points())
        if (q != 0)
            fin_nonzero.push_back(q);
    RatFunc pi_prime = vanish_factor(fin_nonzero, c.m);

    Rat total = 0;
    for (int b = 0; b < g.dim(); ++b) {
        if (c.comp[b].empty())
            continue;
        RatFunc cocycle = pi_prime * ratfunc_from_laurent_at(Rat(0), c.comp[b]);
        for (int b2 = 0; b2 < g.dim(); ++b2) {
            const Rat& k = g.killing_gram().at(b, b2);
            if (k == 0 || tau.comp[b2].is_zero())
                continue;
            auto ser = (cocycle * tau.comp[b2]).expand_at(Rat(0), -1);
            auto res = ser.find(-1);
            if (res != ser.end())
                total += k * res->second;
        }
    }
    return total;
}

DualityReport verify_duality(const SplitBundle& bundle, const MarkedCurve& curve,
                             const LieAlgebra& g, int N, int m) {
    TruncationWindow win{int(curve.points.size()), N, m};
    DualityReport r;
    r.window_dim = window_dim(win, g);
    Subspace gamma = gamma_image(bundle, curve, g, win, N);
    Subspace eta = eta_image(bundle, curve, g, win, m);
    r.gamma_dim = gamma.dim();
    r.eta_dim = eta.dim();

    auto ann_gamma = window_annihilator({win, Side::function, gamma}, g);
    auto ann_eta = window_annihilator({win, Side::differential, eta}, g);
    r.mutual_annihilators = (ann_gamma.space == eta) && (ann_eta.space == gamma);
    r.dims_add_up = (r.gamma_dim + r.eta_dim == r.window_dim);

    r.vanishing_conditions = true;
    int npts = win.npts;
    for (int b = 0; b < g.dim(); ++b) {
        int d = summand_degree(bundle, g, b);
        if (d + N * npts < -1)
            r.vanishing_conditions = false;  // h^1(O(d + N n)) != 0
        if (d - m * npts >= 0)
            r.vanishing_conditions = false;  // h^0(O(d - m n)) != 0
    }
    r.pass = r.mutual_annihilators && r.dims_add_up;
    std::ostringstream d;
    d << "gamma=" << r.gamma_dim << " eta=" << r.eta_dim << " window=" << r.window_dim
      << " mutual=" << (r.mutual_annihilators ? "yes" : "no");
    r.detail = d.str();
    return r;
}

CompatReport verify_compatibility(const SplitBundle& bundle, const MarkedCurve& curve,
                                  const LieAlgebra& g, int N, int m, int trials,
                                  std::uint64_t seed) {
    TruncationWindow win{int(curve.points.size()), N, m};
    int wd = window_dim(win, g);
    Matrix gram = residue_gram(win, g);
    auto tau_basis = section_basis(bundle, curve, g, Side::differential, m);
    std::vector<std::vector<Rat>> tau_embedded;
    for (const auto& t : tau_basis)
        tau_embedded.push_back(expand_section(t, bundle, curve, win));

    CompatReport r;
    r.trials = trials;
    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        auto w = rng.rat_vector(wd, 5, 3);
        AdSection tau(&g, true);
        std::vector<Rat> tau_vec(wd);
        for (std::size_t i = 0; i < tau_basis.size(); ++i) {
            Rat coeff = rng.small_rat(5, 3);
            tau = tau + tau_basis[i] * coeff;
            for (int j = 0; j < wd; ++j)
                tau_vec[j] += coeff * tau_embedded[i][j];
        }
        Rat lhs = serre_pairing(connecting_delta(w, bundle, curve, g, N, m), tau, bundle,
                                curve, g);
        Rat rhs = dot(vec_mat(w, gram), tau_vec);
        if (lhs != rhs) {
            ++r.failures;
            if (r.witness.empty()) {
                std::ostringstream os;
                os << "trial " << trial << ": B(delta(w),tau)=" << rat_to_string(lhs)
                   << " R(w,eta(tau))=" << rat_to_string(rhs);
                r.witness = os.str();
            }
        }
    }
    r.pass = (r.failures == 0);
    return r;
}

}  // namespace loopform
