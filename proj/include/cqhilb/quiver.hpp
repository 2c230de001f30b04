#ifndef CQHILB_QUIVER_HPP
#define CQHILB_QUIVER_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cqhilb/action.hpp"
#include "cqhilb/ghilb.hpp"
#include "cqhilb/rational.hpp"

namespace cqh {

/*
 * Arrows of the McKay quiver. An Up arrow of copy i (1 <= i <= s) is
 * multiplication by the first-block coordinate z_i and goes k -> k+1; a Down
 * arrow of copy j (1 <= j <= n-s) is multiplication by z_{s+j} and goes
 * k -> k-1. Vertex k holds the standard monomial with (A - B) = k mod r.
 */
struct Arrow {
    enum class Direction { Up, Down };
    Direction direction = Direction::Up;
    int copy = 1;
    int source = 0;

    friend auto operator<=>(const Arrow&, const Arrow&) = default;
    std::string str() const;  // "up1@0", "down2@3"
};

class McKayQuiver {
public:
    explicit McKayQuiver(const GroupData& g);

    const GroupData& group() const { return g_; }
    int vertices() const { return g_.r(); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    int target(const Arrow& a) const;
    /// The arrow for 1-based coordinate i leaving vertex k.
    Arrow coordinate_arrow(int i, int k) const;
    /// Number of arrows k -> l.
    int arrow_count(int k, int l) const;

private:
    GroupData g_;
    std::vector<Arrow> arrows_;
};

McKayQuiver build_quiver(const GroupData& g);

/// One scalar per arrow, dimension vector all ones.
using QuiverRep = std::map<Arrow, Rational>;

QuiverRep constant_rep(const McKayQuiver& q, const Rational& value);
QuiverRep rep_with_support(const McKayQuiver& q, const std::set<Arrow>& support);

class MissingArrow : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Commutativity of every pair of coordinate multiplications at every vertex.
/// Covers the xy, yy and xx families. Throws MissingArrow if an arrow has no scalar.
bool check_relations(const McKayQuiver& q, const QuiverRep& rep);

/// Every vertex reachable from vertex 0 through nonzero arrows.
bool is_stable(const McKayQuiver& q, const QuiverRep& rep);

std::set<Arrow> support(const QuiverRep& rep);
bool support_is_acyclic(const McKayQuiver& q, const QuiverRep& rep);

struct Chart {
    FixedPointLabel fixed_point;
    std::set<Arrow> unit_arrows;
};

/// Nonvanishing arrows of the affine chart around a fixed point.
std::set<Arrow> chart_unit_arrows(const McKayQuiver& q, const FixedPointLabel& label);

struct FixedPointRep {
    QuiverRep rep;
    Chart chart;
};

/// Representation of the G-cluster at a fixed point: an arrow carries 1 iff
/// it sends a standard monomial to a standard monomial. Throws
/// ConsistencyError if this differs from the chart pattern or fails the
/// relations or stability.
FixedPointRep rep_from_fixed_point(const McKayQuiver& q, const FixedPointIdeal& p);

/// {E_i : support acyclic and vertex i a sink}. Throws std::domain_error for unstable reps.
std::set<int> divisor_membership(const McKayQuiver& q, const QuiverRep& rep);

struct ChartVerdict {
    FixedPointLabel fixed_point;
    bool contains_witness = false;
};

struct ConnectednessWitness {
    bool relations = false;
    bool stable = false;
    std::vector<ChartVerdict> charts;
    bool passed() const;
};

/// The all-ones representation lies in every chart.
ConnectednessWitness connectedness_witness(const GroupData& g);

struct SinkPatternScan {
    long supports_examined = 0;
    long stable_acyclic = 0;
    long with_relations = 0;
    long violations = 0;  // sink sets other than {i} or {i, i+1}
    std::set<std::set<int>> sink_sets;
};

/// Exhaustive scan over all 0/1 supports; only for n * r <= 20.
SinkPatternScan sink_pattern_scan(const GroupData& g);

}  // namespace cqh

#endif  // CQHILB_QUIVER_HPP
