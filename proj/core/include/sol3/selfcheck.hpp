#pragma once

// Built-in verification suite: the numbered checks behind `sol3 selftest`
// and the acceptance test binary. Every check is deterministic for a fixed
// seed and reports the worst error it saw, normalized by the tolerance.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sol3 {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double worst = 0.0;  // max over the check's parts of |error| / tolerance
    std::string detail;  // worst part with its raw error and tolerance
};

struct SelfCheckOptions {
    // Replaces every part tolerance when set (tightening it surfaces the
    // numerical noise floor as reported failures, not crashes).
    std::optional<double> tol_override{};
    std::uint64_t seed = 0x5013557260ULL;
};

std::vector<CheckResult> run_selfcheck(const SelfCheckOptions& opts = {});

}  // namespace sol3
