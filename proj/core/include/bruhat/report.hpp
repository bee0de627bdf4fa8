#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace bruhat {

struct Failure {
    nlohmann::json input;
    nlohmann::json expected;
    nlohmann::json got;
};

/// Machine-readable outcome of one verification suite.
struct SuiteReport {
    std::string suite;
    uint64_t trials = 0;
    std::vector<Failure> failures;
    uint64_t precision_aborts = 0;
    nlohmann::json extra = nlohmann::json::object();

    bool ok() const { return failures.empty(); }
    void add_failure(nlohmann::json input, nlohmann::json expected, nlohmann::json got);
    void merge(const SuiteReport& other);
    nlohmann::json to_json() const;
};

} // namespace bruhat
