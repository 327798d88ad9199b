#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace meixner {

// One verified identity instance. A failing check always carries a witness
// with the offending indices and both side values.
struct CheckResult {
    std::string identity;
    nlohmann::json params;
    bool pass = false;
    nlohmann::json witness;  // null unless the check failed
};

class VerificationReport {
public:
    void add(CheckResult check) { checks_.push_back(std::move(check)); }
    void merge(VerificationReport other);

    const std::vector<CheckResult>& checks() const { return checks_; }
    bool all_passed() const;
    std::size_t failure_count() const;

    nlohmann::json to_json() const;

private:
    std::vector<CheckResult> checks_;
};

}  // namespace meixner
