#pragma once

#include <json.hpp>

#include "strataforge/presentation.hpp"

namespace strataforge {

// A parsed fixture file: the presentation, the realized stratified algebra,
// and the optional expected-results block used for regression checks.
struct Fixture {
    std::string name;
    AlgebraPresentation presentation;
    StratifiedAlgebra stratified;
    nlohmann::ordered_json expected;  // null when absent
};

Fixture parse_fixture(const nlohmann::ordered_json& j);
Fixture load_fixture(const std::string& path);

struct RunOptions {
    long long budget = 1 << 20;
    bool oracle = true;
    std::string report = "text";  // "text" | "json"
    bool quiet = false;
};

// exit codes: 0 pass, 1 verification failure, 2 usage/parse, 3 budget
struct RunResult {
    int exit_code = 0;
    std::string report;
};

// command: check | covers | present | extquiver
RunResult run_command(const std::string& command, const Fixture& fx, const RunOptions& opt);

// The default budget: STRATA_FORGE_BUDGET when set, 2^20 otherwise.
long long default_budget();

}  // namespace strataforge
