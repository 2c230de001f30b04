#ifndef CQHILB_VERIFY_HPP
#define CQHILB_VERIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "cqhilb/action.hpp"

namespace cqh {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// A documented disagreement between a computed value and a published one.
struct Erratum {
    std::string id;
    std::string description;
    std::string computed;
    std::string published;

    friend bool operator==(const Erratum&, const Erratum&) = default;
};

struct Certificate {
    int s = 0, n = 0, r = 0;
    std::vector<Check> checks;
    std::vector<Erratum> errata;

    bool passed() const;
    int passed_count() const;
    const Check* find(const std::string& name) const;
};

/// Known published-value deviations that apply to this triple.
std::vector<Erratum> errata_for(const GroupData& g);

/*
 * Runs every module invariant for one triple. A check that throws is
 * recorded as failed with the exception message; nothing is skipped
 * silently. Checks that only apply to a range of triples (the exhaustive
 * sink-pattern scan) report themselves as passed with a "not applicable"
 * detail outside that range.
 */
Certificate verify(const GroupData& g);

/// Summary that must agree between (s, n, r) and (n - s, n, r).
nlohmann::json convention_free_summary(const GroupData& g);

nlohmann::json to_json(const Certificate& c);
void to_json(nlohmann::json& j, const Erratum& e);
void from_json(const nlohmann::json& j, Erratum& e);

}  // namespace cqh

#endif  // CQHILB_VERIFY_HPP
