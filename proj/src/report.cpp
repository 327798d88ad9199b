#include "meixner/report.hpp"

namespace meixner {

void VerificationReport::merge(VerificationReport other) {
    for (CheckResult& check : other.checks_) {
        checks_.push_back(std::move(check));
    }
}

bool VerificationReport::all_passed() const {
    for (const CheckResult& check : checks_) {
        if (!check.pass) {
            return false;
        }
    }
    return true;
}

std::size_t VerificationReport::failure_count() const {
    std::size_t count = 0;
    for (const CheckResult& check : checks_) {
        if (!check.pass) {
            ++count;
        }
    }
    return count;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    for (const CheckResult& check : checks_) {
        nlohmann::json entry{{"identity", check.identity},
                             {"params", check.params},
                             {"pass", check.pass}};
        if (!check.witness.is_null()) {
            entry["witness"] = check.witness;
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

}  // namespace meixner
