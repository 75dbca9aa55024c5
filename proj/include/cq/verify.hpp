#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cq {

struct CheckResult {
    enum class Status { Pass, Fail, Skip };

    std::string name;
    std::string range;  // human-readable range the check ran over
    Status status = Status::Skip;
    std::string detail; // witness on failure, outcome note otherwise
    double ms = 0.0;

    bool failed() const { return status == Status::Fail; }
};

const char* status_name(CheckResult::Status s);

struct VerifyOptions {
    // When set, scan ranges are clamped to [lo, hi] and fixed-size checks
    // outside the window are skipped. When unset, every check runs over its
    // full default range.
    std::optional<std::pair<unsigned, unsigned>> range;
    unsigned jobs = 1;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    double total_ms = 0.0;

    bool all_passed() const;
};

/// Runs the full cross-verification suite: the twelve checks printed by the
/// acceptance binary, in order. The unimodality scan records its outcome
/// but never fails.
VerifyReport run_verification(const VerifyOptions& options = {});

} // namespace cq
