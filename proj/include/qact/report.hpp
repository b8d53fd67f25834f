#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace qact {

struct Check {
    std::string name;
    double residual = 0.0;
    bool pass = true;
};

/// Per-axiom residual report shared by all verifiers.
struct VerifyReport {
    std::vector<Check> checks;
    double tol = 1e-9;

    void add(const std::string& name, double residual) {
        checks.push_back({name, residual, residual <= tol});
    }
    void add_flag(const std::string& name, bool ok) {
        checks.push_back({name, ok ? 0.0 : 1.0, ok});
    }
    bool pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const Check& c) { return c.pass; });
    }
    double max_residual() const {
        double r = 0.0;
        for (const auto& c : checks) r = std::max(r, c.residual);
        return r;
    }
    double residual(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return c.residual;
        return -1.0;
    }
    const Check* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

} // namespace qact
