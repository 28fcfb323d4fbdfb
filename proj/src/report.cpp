#include "innertwist/report.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace innertwist {

void Report::append(const Report& o) {
    results_.insert(results_.end(), o.results_.begin(), o.results_.end());
}

long Report::failures() const {
    long n = 0;
    for (const CheckResult& r : results_)
        if (r.status == CheckStatus::Fail) ++n;
    return n;
}

long Report::skips() const {
    long n = 0;
    for (const CheckResult& r : results_)
        if (r.status == CheckStatus::Skip) ++n;
    return n;
}

std::string Report::render_text() const {
    std::ostringstream out;
    for (const CheckResult& r : results_) {
        const char* tag = r.status == CheckStatus::Pass   ? "[PASS]"
                          : r.status == CheckStatus::Fail ? "[FAIL]"
                                                          : "[SKIP]";
        out << tag << " " << r.anchor << " -- " << r.subject;
        if (!r.detail.empty()) out << ": " << r.detail;
        out << "\n";
    }
    return out.str();
}

namespace {

long thread_budget(long max_threads, std::size_t work_items) {
    long n = max_threads;
    if (n <= 0) {
        if (const char* env = std::getenv("INNERTWIST_THREADS")) {
            char* end = nullptr;
            long parsed = std::strtol(env, &end, 10);
            if (end && *end == '\0' && parsed >= 1) n = parsed;
        }
    }
    if (n <= 0) n = static_cast<long>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    return std::min<long>(n, static_cast<long>(work_items));
}

CheckResult execute(const Check& c) {
    CheckResult r;
    r.anchor = c.anchor;
    r.subject = c.subject;
    if (!c.run) {
        r.status = CheckStatus::Skip;
        r.detail = c.skip_reason;
        return r;
    }
    try {
        CheckOutcome o = c.run();
        r.status = o.passed ? CheckStatus::Pass : CheckStatus::Fail;
        r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
        r.status = CheckStatus::Fail;
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

} // namespace

Report run_checks(const CheckList& checks, long max_threads) {
    std::vector<CheckResult> results(checks.size());
    const long threads = checks.empty() ? 1 : thread_budget(max_threads, checks.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < checks.size(); ++i)
            results[i] = execute(checks[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= checks.size()) return;
                results[i] = execute(checks[i]);
            }
        };
        std::vector<std::thread> pool;
        for (long t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    Report report;
    for (CheckResult& r : results) report.add(std::move(r));
    return report;
}

CheckOutcome expect_equal(const GradedMorphism& lhs,
                          const GradedMorphism& rhs) {
    if (!(lhs.source() == rhs.source()) || !(lhs.target() == rhs.target())) {
        return {false, "the two composites do not even have the same type"};
    }
    auto diff = first_difference(lhs.matrix(), rhs.matrix());
    if (!diff) return {true, ""};
    auto [r, c] = *diff;
    std::ostringstream msg;
    msg << "first difference at (" << lhs.target().label_of(r) << " <- "
        << lhs.source().label_of(c)
        << "): " << format_scalar(lhs.matrix().at(r, c)) << " vs "
        << format_scalar(rhs.matrix().at(r, c));
    return {false, msg.str()};
}

CheckOutcome expect_true(bool ok, const std::string& on_failure) {
    return {ok, ok ? "" : on_failure};
}

} // namespace innertwist
