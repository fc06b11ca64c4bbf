#pragma once

#include <string>
#include <vector>

namespace indel {

enum class CheckLevel { quick, full };

struct CheckOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Cross-check suites runnable from the CLI: bound recovery identities,
/// dominance relations, the tightness instances, the averaging identity, and
/// the oracle soundness sweep. `full` widens every grid.
std::vector<CheckOutcome> run_selfchecks(CheckLevel level);

} // namespace indel
