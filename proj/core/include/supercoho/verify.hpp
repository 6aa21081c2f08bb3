#pragma once

#include "supercoho/io.hpp"

#include <string>
#include <vector>

namespace supercoho {

/// Outcome of one acceptance criterion. `details` holds computed and
/// expected values and is deterministic; `seconds` is wall time.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    Json details;
    double seconds = 0;
};

/// Runs acceptance criterion `id` (1..10). Failures are reported, not thrown;
/// an exception inside a check is recorded as a failure with its message.
CriterionResult run_criterion(int id);

/// Registered suites: gl11, counterexample, injectivity-gl22, half-pair,
/// invariants-gl22, witt, tensor, support, atypicality, jacobi, acceptance.
const std::vector<std::string>& suite_names();
std::vector<CriterionResult> run_suite(const std::string& name);

/// {"suite", "pass", "criteria":[{"id","name","pass","details"}]} (timings omitted).
Json suite_report(const std::string& name, const std::vector<CriterionResult>& results);

/// Modules over gl(r|r) used by the property criteria: trivial, natural, dual,
/// pairwise tensors, adjoint, and Kac / dual Kac modules on characters.
std::vector<std::pair<std::string, Supermodule>> module_battery(const AlgebraPtr& g);

}  // namespace supercoho
