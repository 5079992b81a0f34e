#ifndef PPEVAL_REPORT_HPP
#define PPEVAL_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "ppeval/rational.hpp"
#include "ppeval/state.hpp"

namespace ppeval {

struct Violation {
    std::string context;  // where: "state=10 action=dig-moat", "gate g7", "step q2", ...
    std::string message;
    std::optional<State> state;
    std::optional<std::string> action;
    std::optional<Rational> offending_sum;
};

struct ValidationReport {
    std::vector<Violation> violations;
    // True when the check covered only a seeded pseudo-random sample of the
    // state space (enumeration cap exceeded).
    bool sampled_only = false;

    bool ok() const { return violations.empty(); }

    void add(std::string context, std::string message) {
        violations.push_back({std::move(context), std::move(message), {}, {}, {}});
    }

    std::string to_string() const;
};

}  // namespace ppeval

#endif
