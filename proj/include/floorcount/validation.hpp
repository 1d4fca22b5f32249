#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace floorcount {

struct Violation {
    std::string invariant;
    std::string detail;
};

// Outcome of a structural check; valid exactly when no violation was
// recorded.
struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }

    void add(std::string invariant, std::string detail) {
        violations.push_back({std::move(invariant), std::move(detail)});
    }

    std::string summary() const {
        if (valid()) return "valid";
        std::ostringstream out;
        for (std::size_t i = 0; i < violations.size(); ++i) {
            if (i) out << "; ";
            out << violations[i].invariant << ": " << violations[i].detail;
        }
        return out.str();
    }
};

}  // namespace floorcount
