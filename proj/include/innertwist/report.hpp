#pragma once

#include "innertwist/graded.hpp"

#include <functional>
#include <string>
#include <vector>

namespace innertwist {

enum class CheckStatus { Pass, Fail, Skip };

/// Outcome of one executed check: passed, or failed with a human-readable
/// witness (typically the first matrix entry where two composites differ).
struct CheckOutcome {
    bool passed = false;
    std::string detail;
};

/// A deferred named verification.  `anchor` is the stable identifier of the
/// law being checked (e.g. "coassociativity", "Z1", "CQT3"), `subject` names
/// the structure it is applied to.  A check with no body is reported as
/// skipped with `skip_reason`.
struct Check {
    std::string anchor;
    std::string subject;
    std::function<CheckOutcome()> run;
    std::string skip_reason;
};
using CheckList = std::vector<Check>;

struct CheckResult {
    std::string anchor;
    std::string subject;
    CheckStatus status = CheckStatus::Skip;
    std::string detail;
};

class Report {
public:
    void add(CheckResult r) { results_.push_back(std::move(r)); }
    void append(const Report& o);
    const std::vector<CheckResult>& results() const { return results_; }

    long failures() const;
    long skips() const;
    bool all_passed() const { return failures() == 0; }

    /// One line per check: "[PASS] anchor -- subject".
    std::string render_text() const;

private:
    std::vector<CheckResult> results_;
};

/// Executes a CheckList, possibly on several threads, and assembles the
/// Report in declaration order regardless of completion order.  Thread
/// count: explicit argument if > 0, else the INNERTWIST_THREADS environment
/// variable, else the hardware concurrency.  A check that throws is
/// reported as failed with the exception text.
Report run_checks(const CheckList& checks, long max_threads = 0);

/// Equality-of-composites check body: passes when the two morphisms agree
/// entry for entry; otherwise reports the first differing entry with basis
/// labels and both exact values.
CheckOutcome expect_equal(const GradedMorphism& lhs, const GradedMorphism& rhs);

/// Check body asserting a plain condition.
CheckOutcome expect_true(bool ok, const std::string& on_failure);

} // namespace innertwist
