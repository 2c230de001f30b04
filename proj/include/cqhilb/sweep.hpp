#ifndef CQHILB_SWEEP_HPP
#define CQHILB_SWEEP_HPP

#include <string>
#include <vector>

#include "cqhilb/report.hpp"

namespace cqh {

struct SweepRow {
    int s = 0, n = 0, r = 0;
    bool completed = false;  // false if the row hit a resource limit
    int fixed_points = 0;
    int expected_fixed_points = 0;
    int checks_passed = 0;
    int checks_total = 0;
    bool crepant = false;
    bool terminal = false;
    bool gorenstein = false;
    std::vector<std::string> failed_checks;
    std::string error;

    bool passed() const { return completed && error.empty() && checks_passed == checks_total; }
};

struct SweepResult {
    std::vector<SweepRow> rows;  // ordered by (r, n, s)

    bool complete() const;
    bool passed() const;
    /// 0 all pass, 1 some check failed, 3 some row did not complete.
    int exit_code() const;
};

/// All triples 2 <= r <= max_r, 2 <= n <= max_n, 0 < s < n, in (r, n, s) order.
std::vector<GroupData> sweep_triples(int max_n, int max_r);

/// Runs verify on every triple using up to `jobs` threads. Rows share no state.
SweepResult run_sweep(int max_n, int max_r, int jobs);

std::string render_sweep(const SweepResult& result, Format format);

}  // namespace cqh

#endif  // CQHILB_SWEEP_HPP
