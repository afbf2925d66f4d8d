#include <loopform/scenario.hpp>
#include <loopform/liouville.hpp>
#include <loopform/rng.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace loopform {

const std::vector<std::string> kAllSuites = {
    "duality", "compatibility", "bounded-annihilator", "reduction", "gauge", "loop-form"};

void ScenarioConfig::validate() const {
    if (algebra_type != "sl")
        throw std::invalid_argument("unsupported algebra type: " + algebra_type);
    if (n < 2)
        throw std::invalid_argument("algebra rank must be >= 2");
    MarkedCurve curve{points};
    curve.validate();
    if (!splitting.empty()) {
        SplitBundle b{n, splitting};
        b.validate();
    }
    if (N < 0 || m < 1)
        throw std::invalid_argument("window needs N >= 0 and m >= 1");
    if (trials < 1)
        throw std::invalid_argument("trials must be >= 1");
    if (k < 1)
        throw std::invalid_argument("framing order must be >= 1");
    if (model && *model != "higgs" && *model != "higgs-bounded" && *model != "conn" &&
        *model != "conn-bounded")
        throw std::invalid_argument("unknown model: " + *model);
    for (const auto& s : suites)
        if (std::find(kAllSuites.begin(), kAllSuites.end(), s) == kAllSuites.end())
            throw std::invalid_argument("unknown suite: " + s);
}

bool Report::passed() const {
    for (const auto& c : checks)
        if (c.status != "pass")
            return false;
    return true;
}

ScalarLaurent<Rat> parse_laurent(const std::string& s) {
    ScalarLaurent<Rat> out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    };
    skip_ws();
    if (i == s.size())
        return out;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        }
        std::string num;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
            num.push_back(s[i++]);
        Rat coeff = num.empty() ? Rat(1) : rat_from_string(num);
        int exp = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                bool neg = false;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
                    neg = s[i] == '-';
                    ++i;
                }
                std::string e;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    e.push_back(s[i++]);
                if (e.empty())
                    throw std::invalid_argument("bad exponent in Laurent term: " + s);
                exp = std::stoi(e);
                if (neg)
                    exp = -exp;
            }
        } else if (num.empty()) {
            throw std::invalid_argument("bad Laurent term in: " + s);
        }
        out.add(exp, coeff * sign);
        skip_ws();
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw std::invalid_argument("bad Laurent expression: " + s);
    }
    return out;
}

ScenarioConfig parse_scenario(const nlohmann::json& j) {
    ScenarioConfig c;
    c.name = j.value("name", "unnamed");
    if (j.contains("algebra")) {
        c.algebra_type = j["algebra"].value("type", "sl");
        c.n = j["algebra"].value("n", 2);
    }
    if (!j.contains("points"))
        throw std::invalid_argument("scenario needs a points list");
    for (const auto& p : j["points"]) {
        std::string s = p.get<std::string>();
        c.points.push_back(s == "inf" ? MarkedPoint::infinity()
                                      : MarkedPoint::at(rat_from_string(s)));
    }
    if (j.contains("splitting"))
        c.splitting = j["splitting"].get<std::vector<int>>();
    if (j.contains("attach") && j["attach"].get<std::string>() != "inf")
        throw std::invalid_argument("only attach point \"inf\" is supported");
    if (!j.contains("window"))
        throw std::invalid_argument("scenario needs a window");
    c.N = j["window"].value("N", 0);
    c.m = j["window"].value("m", 1);
    if (j.contains("model"))
        c.model = j["model"].get<std::string>();
    c.k = j.value("k", 1);
    c.trials = j.value("trials", 20);
    c.seed = j.value("seed", std::uint64_t(1));
    c.corrupt_action = j.value("corrupt_action", false);
    if (j.contains("suites"))
        c.suites = j["suites"].get<std::vector<std::string>>();
    if (j.contains("alpha"))
        for (const auto& f : j["alpha"]) {
            AlphaFactor fac;
            if (f.contains("torus")) {
                fac.is_torus = true;
                fac.torus_exps = f["torus"].get<std::vector<int>>();
            } else if (f.contains("unipotent")) {
                const auto& u = f["unipotent"];
                fac.i = u.at("i").get<int>() - 1;
                fac.j = u.at("j").get<int>() - 1;
                fac.poly = parse_laurent(u.at("poly").get<std::string>());
            } else {
                throw std::invalid_argument("alpha factor needs torus or unipotent");
            }
            c.alpha_factors.push_back(std::move(fac));
        }
    c.validate();
    return c;
}

ScenarioConfig load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open scenario file: " + path);
    nlohmann::json j;
    in >> j;
    return parse_scenario(j);
}

MatrixLaurent<Rat> scenario_alpha(const ScenarioConfig& cfg) {
    std::vector<int> split = cfg.splitting;
    if (split.empty())
        split.assign(cfg.n, 0);
    auto alpha = MatrixLaurent<Rat>::torus(split);
    for (const auto& f : cfg.alpha_factors) {
        if (f.is_torus) {
            if (int(f.torus_exps.size()) != cfg.n)
                throw std::invalid_argument("torus factor size differs from rank");
            alpha = alpha * MatrixLaurent<Rat>::torus(f.torus_exps);
        } else {
            if (f.i < 0 || f.j < 0 || f.i >= cfg.n || f.j >= cfg.n || f.i == f.j)
                throw std::invalid_argument("bad unipotent slot in alpha factor");
            auto u = MatrixLaurent<Rat>::identity(cfg.n);
            u.at(f.i, f.j) = f.poly;
            alpha = alpha * u;
        }
    }
    return alpha;
}

namespace {

struct SuiteContext {
    const ScenarioConfig& cfg;
    const LieAlgebra& alg;
    MarkedCurve curve;
    SplitBundle bundle;
    TruncationWindow window;
};

void run_check(Report& rep, const std::string& name,
               const std::function<void(CheckResult&)>& body) {
    CheckResult c;
    c.check_name = name;
    c.status = "pass";
    try {
        body(c);
    } catch (const std::exception& e) {
        c.status = "error";
        c.witness = e.what();
    }
    rep.checks.push_back(std::move(c));
}

void suite_duality(const SuiteContext& ctx, Report& rep) {
    run_check(rep, "duality", [&](CheckResult& c) {
        auto r = verify_duality(ctx.bundle, ctx.curve, ctx.alg, ctx.cfg.N, ctx.cfg.m);
        c.dims["gamma"] = r.gamma_dim;
        c.dims["eta"] = r.eta_dim;
        c.dims["window"] = r.window_dim;
        if (!r.pass) {
            c.status = "fail";
            c.witness = r.detail;
        }
    });
    run_check(rep, "delta-exactness", [&](CheckResult& c) {
        auto gamma = gamma_image(ctx.bundle, ctx.curve, ctx.alg, ctx.window, ctx.cfg.N);
        auto ker = Subspace::span(
            window_dim(ctx.window, ctx.alg),
            kernel(delta_matrix(ctx.bundle, ctx.curve, ctx.alg, ctx.cfg.N, ctx.cfg.m)));
        c.dims["kernel"] = ker.dim();
        c.dims["gamma"] = gamma.dim();
        if (!(ker == gamma)) {
            c.status = "fail";
            c.witness = "ker(delta) differs from the global-section image";
        }
    });
}

void suite_compatibility(const SuiteContext& ctx, Report& rep) {
    run_check(rep, "serre-sign-pin", [&](CheckResult& c) {
        // B([X x], Y dx/x^2) = (X, Y): pins the H^1 residue sign.
        MarkedCurve curve{{MarkedPoint::at(Rat(0))}};
        SplitBundle triv = SplitBundle::trivial(ctx.cfg.n);
        int d = ctx.alg.dim();
        for (int b1 = 0; b1 < d; ++b1)
            for (int b2 = 0; b2 < d; ++b2) {
                CechClass cl;
                cl.alg = &ctx.alg;
                cl.m = 2;
                cl.comp.resize(d);
                cl.comp[b1][1] = 1;
                AdSection tau(&ctx.alg, true);
                tau.comp[b2] = RatFunc(Poly::constant(1), Poly::monomial(2, Rat(1)));
                Rat got = serre_pairing(cl, tau, triv, curve, ctx.alg);
                if (got != ctx.alg.killing_gram().at(b1, b2)) {
                    c.status = "fail";
                    std::ostringstream os;
                    os << "B pin failed at basis pair (" << b1 << "," << b2
                       << "): " << rat_to_string(got);
                    c.witness = os.str();
                    return;
                }
            }
        c.dims["pairs"] = d * d;
    });
    run_check(rep, "serre-compatibility", [&](CheckResult& c) {
        auto r = verify_compatibility(ctx.bundle, ctx.curve, ctx.alg, ctx.cfg.N, ctx.cfg.m,
                                      ctx.cfg.trials, ctx.cfg.seed);
        c.dims["trials"] = r.trials;
        c.dims["failures"] = r.failures;
        if (!r.pass) {
            c.status = "fail";
            c.witness = r.witness;
        }
    });
}

void suite_bounded_annihilator(const SuiteContext& ctx, Report& rep) {
    for (int k = 1; k <= 3; ++k) {
        run_check(rep, "bounded-annihilator-k" + std::to_string(k), [&](CheckResult& c) {
            TruncationWindow w{1, k + 1, k + 2};
            auto r = bounded_annihilator_check(k, w, ctx.alg);
            c.dims["subspace"] = r.subspace_dim;
            c.dims["annihilator"] = r.annihilator_dim;
            c.dims["expected"] = r.expected_dim;
            if (!r.pass) {
                c.status = "fail";
                c.witness = r.detail;
            }
        });
    }
}

ModelKind model_kind(const std::string& s) {
    if (s == "higgs")
        return ModelKind::higgs;
    if (s == "higgs-bounded")
        return ModelKind::higgs_bounded;
    if (s == "conn")
        return ModelKind::conn;
    return ModelKind::conn_bounded;
}

void suite_reduction(const SuiteContext& ctx, Report& rep) {
    run_check(rep, "linear-reduction-random", [&](CheckResult& c) {
        Rng rng(ctx.cfg.seed);
        int failures = 0;
        for (int trial = 0; trial < ctx.cfg.trials; ++trial) {
            int dim = rng.uniform_int(2, 12);
            Matrix a(dim, dim);
            for (int i = 0; i < dim; ++i)
                for (int j = i + 1; j < dim; ++j) {
                    a.at(i, j) = rng.small_rat(5, 3);
                    a.at(j, i) = -a.at(i, j);
                }
            FormMatrix form(FormKind::alternating, a);
            int r = rng.uniform_int(0, dim);
            std::vector<std::vector<Rat>> rows;
            for (int i = 0; i < r; ++i)
                rows.push_back(rng.rat_vector(dim, 5, 3));
            Subspace v2 = Subspace::span(dim, Matrix::from_rows(rows));

            Reduction red = reduce(form, v2);
            // Independent radical oracle: v in V2 with A(v, V2) = 0.
            Subspace oracle =
                subspace_intersect(v2, Subspace::span(dim, kernel(v2.basis() * a)));
            bool ok = (red.radical == oracle) &&
                      (rank(red.reduced.entries) == v2.dim() - red.radical.dim()) &&
                      (red.reduced.entries.rows() == v2.dim() - red.radical.dim());
            if (!ok) {
                ++failures;
                if (c.witness.empty()) {
                    std::ostringstream os;
                    os << "trial " << trial << ": dim=" << dim << " V2=" << v2.dim()
                       << " K=" << red.radical.dim() << " oracle=" << oracle.dim();
                    c.witness = os.str();
                }
            }
        }
        c.dims["trials"] = ctx.cfg.trials;
        c.dims["failures"] = failures;
        if (failures > 0)
            c.status = "fail";
    });

    if (ctx.cfg.model) {
        run_check(rep, "reduced-form-" + *ctx.cfg.model, [&](CheckResult& c) {
            auto alpha = scenario_alpha(ctx.cfg);
            auto r = reduced_form_report(model_kind(*ctx.cfg.model), ctx.cfg.k, alpha,
                                         ctx.bundle, ctx.alg, ctx.window);
            c.dims["window_side"] = r.window_side_dim;
            c.dims["fiber"] = r.fiber_dim;
            c.dims["V2"] = r.v2_dim;
            c.dims["orbit"] = r.orbit_dim;
            c.dims["framing"] = r.framing_dim;
            c.dims["radical"] = r.radical_dim;
            c.dims["expected_radical"] = r.expected_radical_dim;
            c.dims["reduced_rank"] = r.reduced_rank;
            if (!r.pass) {
                c.status = "fail";
                c.witness = r.detail;
            }
        });
    }
}

MatrixLaurent<Rat> elementary(int n, int i, int j, const ScalarLaurent<Rat>& p) {
    auto m = MatrixLaurent<Rat>::identity(n);
    m.at(i, j) = p;
    return m;
}

MatrixLaurent<Rat> random_gauge_element(Rng& rng, int n) {
    // Product of two elementary unipotents with x-polynomials of degree <= 2.
    auto poly = [&] {
        ScalarLaurent<Rat> p;
        for (int e = 0; e >= -2; --e)
            p.add(e, rng.small_rat(3, 2));
        return p;
    };
    int i = rng.uniform_int(0, n - 2);
    return elementary(n, i, i + 1, poly()) * elementary(n, i + 1, i, poly());
}

void suite_gauge(const SuiteContext& ctx, Report& rep) {
    auto alpha = scenario_alpha(ctx.cfg);
    int n = ctx.cfg.n;

    run_check(rep, "right-action-axiom", [&](CheckResult& c) {
        Rng rng(ctx.cfg.seed);
        int fd = window_dim(ctx.window, ctx.alg);
        int failures = 0;
        for (int trial = 0; trial < ctx.cfg.trials; ++trial) {
            auto theta = to_matrix_laurent(window_extract(
                ctx.window, ctx.alg, Side::differential, rng.rat_vector(fd, 3, 2), 0));
            ConnPoint pt{alpha, connection_of(alpha) + theta};
            auto g = random_gauge_element(rng, n);
            auto h = random_gauge_element(rng, n);
            auto lhs = gauge_act(gauge_act(pt, g), h);
            auto rhs = gauge_act(pt, g * h);
            if (!(lhs.alpha == rhs.alpha) || !(lhs.A == rhs.A))
                ++failures;
        }
        c.dims["trials"] = ctx.cfg.trials;
        c.dims["failures"] = failures;
        if (failures > 0) {
            c.status = "fail";
            c.witness = "(pt.g).h != pt.(g.h)";
        }
    });

    run_check(rep, "cocycle-rule", [&](CheckResult& c) {
        Rng rng(ctx.cfg.seed + 1);
        int failures = 0;
        for (int trial = 0; trial < ctx.cfg.trials; ++trial) {
            auto g = random_gauge_element(rng, n);
            auto gi = g.unimodular_inverse();
            auto lhs = connection_of(alpha * g);
            auto rhs = gi * connection_of(alpha) * g + gi * g.derivative();
            if (!(lhs == rhs))
                ++failures;
        }
        c.dims["trials"] = ctx.cfg.trials;
        c.dims["failures"] = failures;
        if (failures > 0) {
            c.status = "fail";
            c.witness = "connection_of(alpha g) != g^-1 A g + g^-1 dg";
        }
    });

    // Three sample gauge elements: two elementary unipotents and their product.
    auto x = ScalarLaurent<Rat>::monomial(-1, Rat(1));
    std::vector<MatrixLaurent<Rat>> samples = {
        elementary(n, 0, 1, x), elementary(n, 1, 0, x * x),
        elementary(n, 0, 1, x) * elementary(n, 1, 0, x * x)};

    run_check(rep, "symplecto-pullback", [&](CheckResult& c) {
        int failures = 0, controls = 0;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            auto r = gauge_symplecto_check(alpha, samples[i], ctx.alg, ctx.window,
                                           ctx.cfg.trials, ctx.cfg.seed + 10 + i);
            failures += ctx.cfg.corrupt_action ? r.control_failures : r.failures;
            controls += r.control_failures;
            if (c.witness.empty() && ctx.cfg.corrupt_action && r.control_failures > 0)
                c.witness = "corrupted action changes the pullback";
            else if (c.witness.empty() && !r.witness.empty())
                c.witness = r.witness;
        }
        c.dims["samples"] = static_cast<long long>(samples.size());
        c.dims["trials_each"] = ctx.cfg.trials;
        c.dims["failures"] = failures;
        c.dims["control_failures"] = controls;
        if (failures > 0)
            c.status = "fail";
    });

    if (!ctx.cfg.corrupt_action) {
        run_check(rep, "negative-control", [&](CheckResult& c) {
            int missing = 0;
            for (std::size_t i = 0; i < samples.size(); ++i) {
                auto r = gauge_symplecto_check(alpha, samples[i], ctx.alg, ctx.window,
                                               ctx.cfg.trials, ctx.cfg.seed + 10 + i);
                if (!r.negative_control_failed)
                    ++missing;
            }
            c.dims["samples"] = static_cast<long long>(samples.size());
            c.dims["undetected"] = missing;
            if (missing > 0) {
                c.status = "fail";
                c.witness = "corrupted action was not detected";
            }
        });
    }
}

void suite_loop_form(const SuiteContext& ctx, Report& rep) {
    run_check(rep, "residue-gram-rank", [&](CheckResult& c) {
        for (int N = 1; N <= 4; ++N)
            for (int m = 1; m <= 4; ++m) {
                TruncationWindow w{1, N, m};
                Matrix gram = residue_gram(w, ctx.alg);
                if (rank(gram) != gram.rows()) {
                    c.status = "fail";
                    c.witness = "degenerate residue Gram at window (" + std::to_string(N) +
                                "," + std::to_string(m) + ")";
                    return;
                }
            }
        c.dims["windows"] = 16;
    });
    run_check(rep, "loop-gram-rank", [&](CheckResult& c) {
        for (int S = 0; S <= 4; ++S) {
            Matrix gram = loop_gram(S, ctx.alg);
            if (rank(gram) != gram.rows()) {
                c.status = "fail";
                c.witness = "degenerate loop Gram at range " + std::to_string(S);
                return;
            }
        }
        c.dims["ranges"] = 5;
    });
    run_check(rep, "residue-dictionary", [&](CheckResult& c) {
        // <x, dict(tau)> = R(x, tau) with dict: t^c dt -> t^{c+1}.
        Rng rng(ctx.cfg.seed);
        TruncationWindow w{1, ctx.cfg.N, ctx.cfg.m};
        int fd = window_dim(w, ctx.alg);
        int failures = 0;
        for (int trial = 0; trial < ctx.cfg.trials; ++trial) {
            auto x =
                window_extract(w, ctx.alg, Side::function, rng.rat_vector(fd, 5, 3), 0);
            auto tau = window_extract(w, ctx.alg, Side::differential,
                                      rng.rat_vector(fd, 5, 3), 0);
            GLaurent dict(&ctx.alg, false);
            for (const auto& [e, v] : tau.coeffs())
                dict.add_term(e + 1, v);
            if (loop_form(x, dict) != residue_pairing({x}, {tau}))
                ++failures;
        }
        c.dims["trials"] = ctx.cfg.trials;
        c.dims["failures"] = failures;
        if (failures > 0) {
            c.status = "fail";
            c.witness = "loop form disagrees with the residue pairing dictionary";
        }
    });
}

}  // namespace

Report run_scenario(const ScenarioConfig& cfg, const std::set<std::string>& suites) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    rep.scenario = cfg.name;
    try {
        cfg.validate();
        LieAlgebra alg = LieAlgebra::sl(cfg.n);
        SuiteContext ctx{cfg, alg, MarkedCurve{cfg.points},
                         cfg.splitting.empty() ? SplitBundle::trivial(cfg.n)
                                               : SplitBundle{cfg.n, cfg.splitting},
                         TruncationWindow{int(cfg.points.size()), cfg.N, cfg.m}};

        std::set<std::string> run = suites;
        if (run.empty())
            run = cfg.suites.empty()
                      ? std::set<std::string>(kAllSuites.begin(), kAllSuites.end())
                      : std::set<std::string>(cfg.suites.begin(), cfg.suites.end());

        for (const auto& s : kAllSuites) {
            if (!run.count(s))
                continue;
            if (s == "duality")
                suite_duality(ctx, rep);
            else if (s == "compatibility")
                suite_compatibility(ctx, rep);
            else if (s == "bounded-annihilator")
                suite_bounded_annihilator(ctx, rep);
            else if (s == "reduction")
                suite_reduction(ctx, rep);
            else if (s == "gauge")
                suite_gauge(ctx, rep);
            else if (s == "loop-form")
                suite_loop_form(ctx, rep);
        }
    } catch (const std::exception& e) {
        CheckResult c;
        c.check_name = "config";
        c.status = "error";
        c.witness = e.what();
        rep.checks.push_back(std::move(c));
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

std::vector<Report> run_scenarios(const std::vector<ScenarioConfig>& cfgs,
                                  const std::set<std::string>& suites) {
    unsigned threads = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("LOOPFORM_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1)
            threads = unsigned(v);
    }
    threads = std::max(1u, std::min<unsigned>(threads, cfgs.size()));

    std::vector<Report> reports(cfgs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cfgs.size())
                return;
            reports[i] = run_scenario(cfgs[i], suites);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    std::sort(reports.begin(), reports.end(),
              [](const Report& a, const Report& b) { return a.scenario < b.scenario; });
    return reports;
}

nlohmann::ordered_json report_to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["scenario"] = r.scenario;
    j["status"] = r.passed() ? "pass" : "fail";
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json cj;
        cj["check_name"] = c.check_name;
        cj["status"] = c.status;
        cj["dims"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : c.dims)
            cj["dims"][k] = v;
        if (!c.witness.empty())
            cj["witness"] = c.witness;
        j["checks"].push_back(std::move(cj));
    }
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::vector<std::string> builtin_scenario_names() {
    std::vector<std::string> names = {"default",
                                      "duality-single",
                                      "duality-two-point",
                                      "duality-twisted",
                                      "bounded-annihilator",
                                      "reduction",
                                      "gauge",
                                      "loop-form-sl2",
                                      "loop-form-sl3"};
    for (const char* model : {"higgs", "conn"})
        for (const char* k : {"", "-k1", "-k2"})
            for (const char* base : {"trivial", "split"})
                names.push_back(std::string("model-") + model + k + "-" + base);
    return names;
}

ScenarioConfig builtin_scenario(const std::string& name) {
    ScenarioConfig c;
    c.name = name;
    c.points = {MarkedPoint::infinity()};
    c.N = 3;
    c.m = 3;
    c.seed = 2024;
    if (name == "default") {
        c.trials = 20;
        return c;
    }
    if (name == "duality-single") {
        c.points = {MarkedPoint::at(Rat(0))};
        c.trials = 50;
        c.suites = {"duality", "compatibility"};
        return c;
    }
    if (name == "duality-two-point") {
        c.points = {MarkedPoint::at(Rat(0)), MarkedPoint::at(Rat(1))};
        c.N = 2;
        c.m = 2;
        c.trials = 50;
        c.suites = {"duality", "compatibility"};
        return c;
    }
    if (name == "duality-twisted") {
        c.splitting = {1, -1};
        c.suites = {"duality"};
        return c;
    }
    if (name == "bounded-annihilator") {
        c.suites = {"bounded-annihilator"};
        return c;
    }
    if (name == "reduction") {
        c.trials = 50;
        c.suites = {"reduction"};
        return c;
    }
    if (name == "gauge") {
        c.trials = 20;
        c.suites = {"gauge"};
        return c;
    }
    if (name == "loop-form-sl2" || name == "loop-form-sl3") {
        c.n = name.back() == '3' ? 3 : 2;
        c.suites = {"loop-form"};
        return c;
    }
    if (name.rfind("model-", 0) == 0) {
        std::string rest = name.substr(6);
        bool split = rest.size() >= 5 && rest.substr(rest.size() - 5) == "split";
        if (split)
            c.splitting = {1, -1};
        std::string model = rest.substr(0, rest.find('-'));
        if (model != "higgs" && model != "conn")
            throw std::invalid_argument("unknown builtin scenario: " + name);
        if (rest.find("-k1-") != std::string::npos) {
            c.k = 1;
            model += "-bounded";
        } else if (rest.find("-k2-") != std::string::npos) {
            c.k = 2;
            model += "-bounded";
        }
        c.model = model;
        c.suites = {"reduction"};
        return c;
    }
    throw std::invalid_argument("unknown builtin scenario: " + name);
}

}  // namespace loopform
