#ifndef CQHILB_GHILB_HPP
#define CQHILB_GHILB_HPP

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cqhilb/action.hpp"
#include "cqhilb/toric.hpp"

namespace cqh {

/// r monomials, one per weight class, closed under division. Kept sorted.
struct GGraph {
    std::vector<Monomial> monomials;

    friend bool operator==(const GGraph&, const GGraph&) = default;
    friend auto operator<=>(const GGraph& a, const GGraph& b) { return a.monomials <=> b.monomials; }
    std::string str() const;
};

bool is_ggraph(const GroupData& g, const std::vector<Monomial>& monomials);

/*
 * Labels of torus-fixed points. In the naming below, "y" variables are the
 * first-block coordinates z_1..z_s and "x" variables the second-block
 * coordinates z_{s+1}..z_n (both 1-based within their block).
 *
 *   Interior(i, j, t), 2 <= t <= r-1: y_i and x_j both survive.
 *   BoundaryX(j): only x_j survives, Gamma = {1, x_j, .., x_j^{r-1}}.
 *   BoundaryY(i): only y_i survives, Gamma = {1, y_i, .., y_i^{r-1}}.
 */
struct Interior {
    int i, j, t;
    friend auto operator<=>(const Interior&, const Interior&) = default;
};
struct BoundaryX {
    int j;
    friend auto operator<=>(const BoundaryX&, const BoundaryX&) = default;
};
struct BoundaryY {
    int i;
    friend auto operator<=>(const BoundaryY&, const BoundaryY&) = default;
};
using FixedPointLabel = std::variant<Interior, BoundaryX, BoundaryY>;

std::string label_str(const FixedPointLabel& label);
/// Inverse of label_str; throws std::invalid_argument.
FixedPointLabel parse_label(const std::string& text);

struct FixedPointIdeal {
    std::vector<Monomial> generators;  // minimal, sorted
    FixedPointLabel label;
};

class InvalidFixedPoint : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Generators for a label; throws InvalidFixedPoint if the label is out of range.
FixedPointIdeal fixed_point_ideal(const GroupData& g, const FixedPointLabel& label);

/// All fixed points: Interior by (i, j, t), then BoundaryX by j, then BoundaryY by i.
std::vector<FixedPointIdeal> enumerate_fixed_points(const GroupData& g);

/// Monomials outside the ideal, sorted. Requires a pure power of every variable among the generators.
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& generators);

/// Standard monomials packaged as a G-graph; throws InvalidFixedPoint if they do not form one.
GGraph companion_graph(const GroupData& g, const FixedPointIdeal& p);

class ConfigurationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/*
 * Exhaustive search for G-graphs with all exponents at most exponent_cap.
 * Independent of the fixed-point classification: order ideals are grown one
 * monomial at a time in increasing monomial order, so each is produced once.
 * Throws ConfigurationError when exponent_cap < r.
 */
std::vector<GGraph> search_ggraphs(const GroupData& g, int exponent_cap);

/*
 * dim Hom_R(I, R/I)^G for a monomial ideal with r standard monomials.
 *
 * Each minimal generator maps to a multiple of the unique standard monomial
 * of its weight; each pair of generators contributes the constraint coming
 * from their lcm syzygy. Returns unknowns minus rank.
 */
int tangent_dimension(const GroupData& g, const FixedPointIdeal& p);

struct ConeMatch {
    std::size_t cone_index;
    std::size_t graph_index;
};

class MatchFailure : public std::runtime_error {
public:
    MatchFailure(const std::string& what, std::vector<RayId> cone) : std::runtime_error(what), cone_rays(std::move(cone)) {}
    std::vector<RayId> cone_rays;
};

/// G-graph of a smooth maximal cone: per weight class, the monomial whose
/// pairings with every ray are simultaneously minimal. Throws MatchFailure.
GGraph cone_ggraph(const GroupData& g, const Cone& cone);

/// One match per cone; throws MatchFailure unless the result is a bijection onto graphs.
std::vector<ConeMatch> match_cones_to_ggraphs(const GroupData& g, const Fan& fan, const std::vector<GGraph>& graphs);

}  // namespace cqh

#endif  // CQHILB_GHILB_HPP
