#ifndef CQHILB_REPORT_HPP
#define CQHILB_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cqhilb/action.hpp"
#include "cqhilb/rational.hpp"
#include "cqhilb/toric.hpp"
#include "cqhilb/verify.hpp"

namespace cqh {

struct FixedPointEntry {
    std::string label;
    std::vector<std::string> generators;
    std::vector<std::string> standard_monomials;
    int tangent_dimension = 0;
    std::vector<int> exceptional_divisors;  // E_t through the point
    std::vector<std::string> cone;          // rays of the matching maximal cone

    friend bool operator==(const FixedPointEntry&, const FixedPointEntry&) = default;
};

struct FmEntry {
    int character = 0;
    std::vector<std::vector<int>> terms;  // terms[p]: line-bundle labels in degree -p
    std::vector<int> h0_support;
    std::vector<int> h_minus_n_support;

    friend bool operator==(const FmEntry&, const FmEntry&) = default;
};

struct Report {
    int s = 0, n = 0, r = 0;

    // singularity
    std::vector<Rational> ages;
    bool canonical = false, terminal = false, gorenstein = false;

    // resolution
    std::vector<Rational> discrepancies;  // index t-1 for E_t
    bool crepant = false;
    std::vector<Divisor> principal_divisors;  // div(z_i), i = 1..n

    // fan
    int cone_count = 0;
    bool smooth = false;
    std::vector<std::vector<std::string>> cones;
    std::vector<std::pair<int, int>> intersection_graph;
    std::vector<int> projective_type;  // E_t whose star has n maximal cones (s = 1 or s = n-1)

    // hilb
    std::vector<FixedPointEntry> fixed_points;

    // mckay
    std::vector<std::vector<Rational>> mckay_table;  // [k][t-1]
    std::vector<std::pair<int, int>> correspondence;  // (chi_t, E_t)
    std::vector<Divisor> m_divisors;                  // M_{chi_k}, k = 0..r-1
    std::vector<Erratum> errata;

    // fm
    std::vector<FmEntry> fm;

    // quiver
    std::vector<std::vector<int>> arrow_counts;  // [k][l] arrows k -> l
    int chart_count = 0;
    bool witness = false;

    friend bool operator==(const Report&, const Report&) = default;
};

/// Runs every module on the triple.
Report build_report(const GroupData& g);

enum class Section { All, FixedPoints, Fan, McKayTable, Fm, Quiver };
enum class Format { Json, Markdown, Csv };

nlohmann::json to_json(const Report& report);
/// Inverse of to_json; throws nlohmann::json::exception or std::invalid_argument on malformed input.
Report report_from_json(const nlohmann::json& j);

/// Rendered text, terminated by a newline.
std::string render(const Report& report, Section section, Format format);

}  // namespace cqh

#endif  // CQHILB_REPORT_HPP
