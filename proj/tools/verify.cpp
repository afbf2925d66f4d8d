#include <loopform/scenario.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"loopform scenario verifier"};
    app.failure_message(CLI::FailureMessage::help);

    std::string scenario_path, builtin, out_path, suites_csv;
    std::uint64_t seed = 0;
    bool seed_set = false;

    auto* opt_scenario =
        app.add_option("--scenario", scenario_path, "Path to a scenario JSON file");
    auto* opt_builtin =
        app.add_option("--builtin", builtin, "Builtin scenario name, or 'all'");
    app.add_option("--out", out_path, "Write the JSON report to this path");
    app.add_option("--suites", suites_csv,
                   "Comma-separated suite list (default: scenario's own suites)");
    auto* opt_seed = app.add_option("--seed", seed, "Override the scenario seed");
    opt_scenario->excludes(opt_builtin);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    seed_set = opt_seed->count() > 0;

    if (scenario_path.empty() && builtin.empty()) {
        std::cerr << "one of --scenario or --builtin is required\n"
                  << app.help() << std::endl;
        return 2;
    }

    std::set<std::string> suites;
    if (!suites_csv.empty()) {
        std::stringstream ss(suites_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) {
                bool known = false;
                for (const auto& s : loopform::kAllSuites)
                    known = known || s == item;
                if (!known) {
                    std::cerr << "unknown suite: " << item << std::endl;
                    return 2;
                }
                suites.insert(item);
            }
    }

    std::vector<loopform::ScenarioConfig> cfgs;
    try {
        if (!scenario_path.empty()) {
            cfgs.push_back(loopform::load_scenario_file(scenario_path));
        } else if (builtin == "all") {
            for (const auto& name : loopform::builtin_scenario_names())
                cfgs.push_back(loopform::builtin_scenario(name));
        } else {
            cfgs.push_back(loopform::builtin_scenario(builtin));
        }
        if (seed_set)
            for (auto& c : cfgs)
                c.seed = seed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }

    auto reports = loopform::run_scenarios(cfgs, suites);

    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    bool all_pass = true;
    bool any_error = false;
    for (const auto& r : reports) {
        out.push_back(loopform::report_to_json(r));
        all_pass = all_pass && r.passed();
        for (const auto& c : r.checks)
            any_error = any_error || c.status == "error";
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.scenario << " ("
                  << r.elapsed_ms << " ms)" << std::endl;
        for (const auto& c : r.checks)
            if (c.status != "pass")
                std::cout << "  " << c.status << " " << c.check_name
                          << (c.witness.empty() ? "" : ": " + c.witness) << std::endl;
    }

    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot write report: " << out_path << std::endl;
            return 2;
        }
        f << out.dump(2) << std::endl;
    }

    if (any_error)
        return 2;
    return all_pass ? 0 : 1;
}
