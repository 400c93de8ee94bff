#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace orbitpart {

/// One named verification outcome. `value` is the measured quantity and
/// `threshold` the bound it was compared against; `passed` records the
/// decision so that non-numeric checks can carry a value of 0.
struct Check {
    std::string name;
    bool passed = false;
    double value = 0.0;
    double threshold = 0.0;
};

struct CheckList {
    std::vector<Check> checks;

    void add(std::string name, bool passed, double value = 0.0, double threshold = 0.0) {
        checks.push_back({std::move(name), passed, value, threshold});
    }
    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }
    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

}  // namespace orbitpart
