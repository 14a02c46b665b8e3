#pragma once

#include <string>
#include <vector>

namespace l2b {

/// A single violation: which basis tuple (or monomial) and the defect it produced.
struct Witness {
    std::string where;
    std::string defect;
};

/// One named identity evaluated over all basis tuples.
struct Check {
    std::string id;
    std::vector<Witness> witnesses;
    bool pass() const { return witnesses.empty(); }
};

/// Outcome of a verifier: empty witness lists everywhere means pass.
/// Verification failure is a report outcome, never an exception.
struct VerificationReport {
    std::vector<Check> checks;
    double elapsed_ms = 0.0;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass()) return false;
        return true;
    }
    Check& add(std::string id) {
        checks.push_back({std::move(id), {}});
        return checks.back();
    }
    void merge(const VerificationReport& o, const std::string& prefix = "") {
        for (const auto& c : o.checks) {
            checks.push_back(c);
            if (!prefix.empty()) checks.back().id = prefix + c.id;
        }
    }
    std::string to_text() const;
};

} // namespace l2b
