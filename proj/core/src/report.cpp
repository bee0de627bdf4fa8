#include "bruhat/report.hpp"

namespace bruhat {

void SuiteReport::add_failure(nlohmann::json input, nlohmann::json expected,
                              nlohmann::json got) {
    failures.push_back({std::move(input), std::move(expected), std::move(got)});
}

void SuiteReport::merge(const SuiteReport& other) {
    trials += other.trials;
    precision_aborts += other.precision_aborts;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["trials"] = trials;
    nlohmann::json fs = nlohmann::json::array();
    for (auto& f : failures)
        fs.push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
    j["failures"] = fs;
    j["precision_aborts"] = precision_aborts;
    if (!extra.empty()) j["extra"] = extra;
    return j;
}

} // namespace bruhat
