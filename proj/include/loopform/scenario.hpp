#pragma once

#include <loopform/lie.hpp>
#include <loopform/moduli.hpp>
#include <loopform/p1.hpp>
#include <loopform/window.hpp>

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace loopform {

/// One factor of a symbolic basepoint: diag(t^{a_i}) or 1 + p(t) E_ij.
struct AlphaFactor {
    bool is_torus = false;
    std::vector<int> torus_exps;
    int i = 0, j = 0;             // unipotent slot, 0-based after parsing
    ScalarLaurent<Rat> poly;      // unipotent entry
};

struct ScenarioConfig {
    std::string name;
    std::string algebra_type = "sl";
    int n = 2;
    std::vector<MarkedPoint> points;
    std::vector<int> splitting;   // defaults to all-zero
    int N = 0, m = 1;
    std::optional<std::string> model;  // higgs | higgs-bounded | conn | conn-bounded
    int k = 1;
    int trials = 20;
    std::uint64_t seed = 1;
    std::vector<AlphaFactor> alpha_factors;  // applied after the split transition
    bool corrupt_action = false;
    std::vector<std::string> suites;  // default suite selection for this scenario

    void validate() const;
};

struct CheckResult {
    std::string check_name;
    std::string status;  // pass | fail | error
    std::map<std::string, long long> dims;
    std::string witness;
};

struct Report {
    std::string scenario;
    std::vector<CheckResult> checks;
    long long elapsed_ms = 0;

    bool passed() const;
};

extern const std::vector<std::string> kAllSuites;

ScenarioConfig parse_scenario(const nlohmann::json& j);
ScenarioConfig load_scenario_file(const std::string& path);

std::vector<std::string> builtin_scenario_names();
ScenarioConfig builtin_scenario(const std::string& name);

/// Small Laurent-polynomial parser for alpha specs: sums of c*t^e terms,
/// e.g. "t^-1", "2t^3+1/2", "-t".
ScalarLaurent<Rat> parse_laurent(const std::string& s);

/// Basepoint matrix: split transition times the alpha factors.
MatrixLaurent<Rat> scenario_alpha(const ScenarioConfig& cfg);

Report run_scenario(const ScenarioConfig& cfg, const std::set<std::string>& suites);

/// Runs scenarios in parallel (capped by LOOPFORM_THREADS), merging
/// reports sorted by scenario name.
std::vector<Report> run_scenarios(const std::vector<ScenarioConfig>& cfgs,
                                  const std::set<std::string>& suites);

nlohmann::ordered_json report_to_json(const Report& r);

}  // namespace loopform
