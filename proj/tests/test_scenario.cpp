#include <doctest.h>

#include <loopform/scenario.hpp>

#include <json.hpp>

using namespace loopform;
using nlohmann::json;

TEST_CASE("parse_laurent accepts signed rational terms") {
    CHECK(parse_laurent("t^-1") == ScalarLaurent<Rat>::monomial(-1, Rat(1)));
    CHECK(parse_laurent("-t") == ScalarLaurent<Rat>::monomial(1, Rat(-1)));
    auto p = parse_laurent("2t^3 + 1/2 - t^-2");
    CHECK(p.coeff(3) == Rat(2));
    CHECK(p.coeff(0) == Rat(1, 2));
    CHECK(p.coeff(-2) == Rat(-1));
    CHECK(parse_laurent("").is_zero());
    CHECK_THROWS(parse_laurent("t^"));
    CHECK_THROWS(parse_laurent("2x"));
}

TEST_CASE("scenario parsing, validation, and the symbolic basepoint") {
    json j = {
        {"name", "parse-check"},
        {"algebra", {{"type", "sl"}, {"n", 2}}},
        {"points", {"inf"}},
        {"splitting", {1, -1}},
        {"attach", "inf"},
        {"window", {{"N", 3}, {"m", 3}}},
        {"seed", 7},
        {"alpha", {{{"unipotent", {{"i", 1}, {"j", 2}, {"poly", "t^-1"}}}}}},
    };
    ScenarioConfig cfg = parse_scenario(j);
    CHECK(cfg.name == "parse-check");
    CHECK(cfg.points.size() == 1);
    CHECK(cfg.points[0].infinite);
    CHECK(cfg.splitting == std::vector<int>{1, -1});
    CHECK(cfg.seed == 7);
    REQUIRE(cfg.alpha_factors.size() == 1);
    CHECK(cfg.alpha_factors[0].i == 0);  // 1-based in the file
    CHECK(cfg.alpha_factors[0].j == 1);

    auto alpha = scenario_alpha(cfg);
    auto expected_u = MatrixLaurent<Rat>::identity(2);
    expected_u.at(0, 1) = ScalarLaurent<Rat>::monomial(-1, Rat(1));
    CHECK(alpha == MatrixLaurent<Rat>::torus({1, -1}) * expected_u);

    json dup = j;
    dup["points"] = {"0", "0"};
    dup.erase("splitting");
    CHECK_THROWS(parse_scenario(dup));

    json bad_split = j;
    bad_split["splitting"] = {2, 1};
    CHECK_THROWS(parse_scenario(bad_split));

    json bad_attach = j;
    bad_attach["attach"] = "0";
    CHECK_THROWS(parse_scenario(bad_attach));

    json no_window = j;
    no_window.erase("window");
    CHECK_THROWS(parse_scenario(no_window));
}

TEST_CASE("builtin scenarios all parse and carry valid suites") {
    auto names = builtin_scenario_names();
    CHECK(names.size() >= 10);
    for (const auto& name : names) {
        ScenarioConfig cfg = builtin_scenario(name);
        CHECK(cfg.name == name);
        for (const auto& s : cfg.suites)
            CHECK(std::find(kAllSuites.begin(), kAllSuites.end(), s) != kAllSuites.end());
    }
    CHECK_THROWS(builtin_scenario("no-such-scenario"));
}

TEST_CASE("running a small scenario produces a deterministic passing report") {
    ScenarioConfig cfg = builtin_scenario("duality-single");
    cfg.trials = 5;
    Report r1 = run_scenario(cfg, {"duality", "compatibility"});
    CHECK(r1.passed());
    CHECK_FALSE(r1.checks.empty());
    Report r2 = run_scenario(cfg, {"duality", "compatibility"});
    auto j1 = report_to_json(r1), j2 = report_to_json(r2);
    j1.erase("elapsed_ms");
    j2.erase("elapsed_ms");
    CHECK(j1 == j2);
}

TEST_CASE("report JSON carries names, statuses, and dimensions") {
    ScenarioConfig cfg = builtin_scenario("duality-single");
    cfg.trials = 3;
    Report r = run_scenario(cfg, {"duality"});
    auto j = report_to_json(r);
    CHECK(j["scenario"] == "duality-single");
    CHECK(j["status"] == "pass");
    bool found = false;
    for (const auto& c : j["checks"])
        if (c["check_name"] == "duality") {
            found = true;
            CHECK(c["dims"]["gamma"] == 12);
            CHECK(c["dims"]["eta"] == 6);
            CHECK(c["dims"]["window"] == 18);
        }
    CHECK(found);
}

TEST_CASE("a corrupted action is detected and reported as failure") {
    ScenarioConfig cfg = builtin_scenario("gauge");
    cfg.trials = 4;
    cfg.corrupt_action = true;
    Report r = run_scenario(cfg, {"gauge"});
    CHECK_FALSE(r.passed());
    bool saw_fail = false;
    for (const auto& c : r.checks)
        if (c.status == "fail")
            saw_fail = true;
    CHECK(saw_fail);
}

TEST_CASE("config errors surface as an error check, not an exception") {
    ScenarioConfig cfg = builtin_scenario("duality-single");
    cfg.n = 2;
    cfg.splitting = {3, -2};  // does not sum to zero
    Report r = run_scenario(cfg, {"duality"});
    CHECK_FALSE(r.passed());
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].status == "error");
    CHECK_FALSE(r.checks[0].witness.empty());
}

TEST_CASE("run_scenarios covers every requested scenario") {
    std::vector<ScenarioConfig> cfgs = {builtin_scenario("duality-single"),
                                        builtin_scenario("loop-form-sl2")};
    for (auto& c : cfgs)
        c.trials = 3;
    auto reports = run_scenarios(cfgs, {});
    CHECK(reports.size() == 2);
    for (const auto& r : reports)
        CHECK(r.passed());
}
