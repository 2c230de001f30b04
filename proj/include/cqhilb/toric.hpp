#ifndef CQHILB_TORIC_HPP
#define CQHILB_TORIC_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cqhilb/action.hpp"
#include "cqhilb/matrix.hpp"
#include "cqhilb/rational.hpp"

namespace cqh {

/*
 * A ray of the resolution fan, which is also the name of the torus-invariant
 * prime divisor it defines: Z_i for the coordinate ray e_i (1-based) and
 * E_t for the exceptional ray v_t.
 */
struct RayId {
    enum class Kind { Coordinate, Exceptional };
    Kind kind = Kind::Coordinate;
    int index = 1;

    static RayId coordinate(int i) { return {Kind::Coordinate, i}; }
    static RayId exceptional(int t) { return {Kind::Exceptional, t}; }
    bool is_exceptional() const { return kind == Kind::Exceptional; }

    /// "Z_3" or "E_2".
    std::string str() const;
    /// Inverse of str(); throws std::invalid_argument.
    static RayId parse(const std::string& text);

    friend auto operator<=>(const RayId&, const RayId&) = default;
};

using LatticePoint = std::vector<Rational>;

/// Membership in N = Z^n + Z * (1/r)(1,..,1, r-1,..,r-1).
bool in_lattice(const GroupData& g, const LatticePoint& p);
/// p in N and p/d not in N for every integer d >= 2.
bool is_primitive(const GroupData& g, const LatticePoint& p);

/// Coordinates of a ray generator in the standard basis of Q^n.
LatticePoint ray_coords(const GroupData& g, RayId id);

/// v_t = (1/r)(r-t,..,r-t, t,..,t). Throws std::out_of_range unless 1 <= t <= r-1.
LatticePoint ray_v(const GroupData& g, int t);

struct Cone {
    std::vector<RayId> ray_ids;  // sorted
    std::vector<LatticePoint> rays;

    int dim() const { return static_cast<int>(rays.size()); }
    bool contains_ray(RayId id) const;
    RatMatrix matrix() const;  // one row per ray
};

Cone make_cone(const GroupData& g, std::vector<RayId> ids);

struct Fan {
    std::vector<Cone> maximal_cones;
};

/// Iterated star subdivision of the positive orthant at v_1, ..., v_{r-1}.
Fan resolution_fan(const GroupData& g);

/// Star subdivision of simplicial maximal cones at a new ray.
Fan star_subdivide(const GroupData& g, const Fan& fan, RayId new_ray);

/// |det| of the ray matrix in standard coordinates.
Rational cone_volume(const Cone& c);

/// True iff the rays form a basis of N, i.e. |det| = 1/r.
/// Throws DimensionError for cones of dimension below n.
bool cone_is_smooth(const GroupData& g, const Cone& c);

/// Solves point = sum lambda_i ray_i; empty when the rays are dependent.
std::vector<Rational> cone_coordinates(const Cone& c, const LatticePoint& point);
bool cone_contains(const Cone& c, const LatticePoint& point);

/// Pairing of an exponent vector with v_t.
Rational valuation(const GroupData& g, const Monomial& m, int t);

/// Formal Q-combination of prime toric divisors. Zero coefficients are dropped.
class Divisor {
public:
    Divisor() = default;

    Rational coefficient(RayId id) const;
    void add(RayId id, const Rational& c);
    const std::map<RayId, Rational>& terms() const { return terms_; }

    /// Exceptional divisors with nonzero coefficient.
    std::set<int> exceptional_support() const;
    bool is_effective() const;

    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend bool operator==(const Divisor&, const Divisor&) = default;

    std::string str() const;

private:
    std::map<RayId, Rational> terms_;
};

/// div(z_i) = Z_i + sum_t valuation(z_i, t) E_t, with 1-based i.
Divisor principal_divisor(const GroupData& g, int i);

/// Coefficient of E_j in K_Y - rho^* K_X: (sum of coordinates of v_j) - 1, j = 1..r-1.
std::vector<Rational> discrepancies(const GroupData& g);
/// The closed-form values n - s + j(2s - n)/r - 1, j = 1..r-1.
std::vector<Rational> discrepancy_formula(const GroupData& g);

/// Pairs (i, j), i < j, of exceptional rays sharing a maximal cone.
std::set<std::pair<int, int>> intersection_graph(const Fan& fan);

/// Number of maximal cones containing each exceptional ray v_1..v_{r-1}.
std::vector<int> exceptional_star_sizes(const GroupData& g, const Fan& fan);

/// Block-equal coordinates and (1/s) sum_first + (1/(n-s)) sum_second = 1.
bool on_exceptional_plane(const GroupData& g, const LatticePoint& p);
/// Every v_t lies on the plane above.
bool coplanarity_check(const GroupData& g);

struct SingularityType {
    std::vector<Rational> ages;  // k = 1..r-1
    bool canonical = false;
    bool terminal = false;
    bool gorenstein = false;
};

/// Reid-Tai ages (s k + (n - s)(r - k))/r over group elements k = 1..r-1.
SingularityType singularity_type(const GroupData& g);

/// The same criterion with k running over 1..n-1, as printed in some sources.
SingularityType singularity_type_over(const GroupData& g, int k_min, int k_max);

/// Minimal monomial generators of the invariant ring.
std::vector<Monomial> invariant_generators(const GroupData& g);

/// Every weight-0 monomial of degree in (r, max_degree] is divisible by a generator.
bool invariant_degree_bound_holds(const GroupData& g, const std::vector<Monomial>& gens, int max_degree);

struct FanCheck {
    bool all_simplicial = true;
    bool all_full_dimensional = true;
    bool rays_primitive = true;
    bool face_compatible = true;       // no ray lies inside a cone it does not generate
    bool facets_separated = true;      // cones sharing a facet lie on opposite sides
    Rational raw_volume_sum;           // sum of |det| in standard coordinates
    Rational normalized_volume_sum;    // rays rescaled onto sum(z) = 1
};

/// Structural checks of a resolution fan against the orthant it refines.
FanCheck check_fan(const GroupData& g, const Fan& fan);

}  // namespace cqh

#endif  // CQHILB_TORIC_HPP
