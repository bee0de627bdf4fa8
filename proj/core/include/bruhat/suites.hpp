#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bruhat/report.hpp"
#include "bruhat/sampler.hpp"
#include "bruhat/series.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat {

/// Everything a suite run depends on; identical configs give identical
/// reports.
struct RunConfig {
    unsigned p = 3;
    int n = 3;
    unsigned precision = 64;
    uint64_t seed = 1;
    uint64_t trials = 0; // 0 picks the per-suite default
    OrderingPreset preset = OrderingPreset::Default;
    std::optional<Character> chi;
    SampleBounds bounds;
    int level = 1; // U^(l) level for the quotient-averaging suite

    nlohmann::json to_json() const;
    static RunConfig from_json(const nlohmann::json& j);
};

/// A generic character for the configured (p, n): c_i = 1 and staggered tame
/// exponents when p > 2; over F_4 with distinct c_i when p = 2.
Character default_character(unsigned p, int n);

const std::vector<std::string>& suite_names();

/// Runs one named verification suite.  Throws invalid_preset for unknown
/// suite names.
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

} // namespace bruhat
