#include "cqhilb/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <new>
#include <sstream>
#include <thread>

#include "cqhilb/ghilb.hpp"
#include "cqhilb/toric.hpp"
#include "cqhilb/verify.hpp"

namespace cqh {

namespace {

SweepRow run_row(const GroupData& g) {
    SweepRow row;
    row.s = g.s();
    row.n = g.n();
    row.r = g.r();
    row.expected_fixed_points = g.s() * (g.n() - g.s()) * (g.r() - 2) + g.n();
    try {
        row.fixed_points = static_cast<int>(enumerate_fixed_points(g).size());
        const auto d = discrepancies(g);
        row.crepant = std::all_of(d.begin(), d.end(), [](const Rational& x) { return x.is_zero(); });
        const auto st = singularity_type(g);
        row.terminal = st.terminal;
        row.gorenstein = st.gorenstein;
        const Certificate cert = verify(g);
        row.checks_total = static_cast<int>(cert.checks.size());
        row.checks_passed = cert.passed_count();
        for (const auto& c : cert.checks)
            if (!c.passed) row.failed_checks.push_back(c.name);
        if (row.fixed_points != row.expected_fixed_points) row.error = "fixed-point count differs from the closed formula";
        row.completed = true;
    } catch (const std::bad_alloc&) {
        row.error = "out of memory";
    } catch (const std::exception& e) {
        row.completed = true;
        row.error = e.what();
    }
    return row;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

bool SweepResult::complete() const {
    return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.completed; });
}

bool SweepResult::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.passed(); });
}

int SweepResult::exit_code() const {
    if (!complete()) return 3;
    return passed() ? 0 : 1;
}

std::vector<GroupData> sweep_triples(int max_n, int max_r) {
    std::vector<GroupData> out;
    for (int r = 2; r <= max_r; ++r)
        for (int n = 2; n <= max_n; ++n)
            for (int s = 1; s < n; ++s) out.push_back(GroupData::validate(s, n, r));
    return out;
}

SweepResult run_sweep(int max_n, int max_r, int jobs) {
    const auto triples = sweep_triples(max_n, max_r);
    SweepResult result;
    result.rows.resize(triples.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < triples.size(); i = next++) result.rows[i] = run_row(triples[i]);
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(triples.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return result;
}

std::string render_sweep(const SweepResult& result, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::Json: {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& r : result.rows) {
                rows.push_back({{"s", r.s},
                                {"n", r.n},
                                {"r", r.r},
                                {"completed", r.completed},
                                {"passed", r.passed()},
                                {"fixed_points", r.fixed_points},
                                {"expected_fixed_points", r.expected_fixed_points},
                                {"checks", std::to_string(r.checks_passed) + "/" + std::to_string(r.checks_total)},
                                {"failed_checks", r.failed_checks},
                                {"crepant", r.crepant},
                                {"terminal", r.terminal},
                                {"gorenstein", r.gorenstein},
                                {"error", r.error}});
            }
            const nlohmann::json doc{{"rows", rows}, {"triples", result.rows.size()}, {"passed", result.passed()}, {"complete", result.complete()}};
            os << doc.dump(2) << "\n";
            break;
        }
        case Format::Markdown:
            os << "| r | n | s | fixed points | expected | checks | crepant | terminal | gorenstein | status |\n"
               << "|---|---|---|---|---|---|---|---|---|---|\n";
            for (const auto& r : result.rows) {
                os << "| " << r.r << " | " << r.n << " | " << r.s << " | " << r.fixed_points << " | " << r.expected_fixed_points
                   << " | " << r.checks_passed << "/" << r.checks_total << " | " << yes_no(r.crepant) << " | "
                   << yes_no(r.terminal) << " | " << yes_no(r.gorenstein) << " | " << (r.passed() ? "pass" : "FAIL") << " |\n";
            }
            break;
        case Format::Csv:
            os << "r,n,s,fixed_points,expected_fixed_points,checks_passed,checks_total,crepant,terminal,gorenstein,status\n";
            for (const auto& r : result.rows) {
                os << r.r << "," << r.n << "," << r.s << "," << r.fixed_points << "," << r.expected_fixed_points << ","
                   << r.checks_passed << "," << r.checks_total << "," << yes_no(r.crepant) << "," << yes_no(r.terminal) << ","
                   << yes_no(r.gorenstein) << "," << (r.passed() ? "pass" : "fail") << "\n";
            }
            break;
    }
    return os.str();
}

}  // namespace cqh
