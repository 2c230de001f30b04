#include "cqhilb/toric.hpp"

#include <algorithm>
#include <stdexcept>

namespace cqh {

std::string RayId::str() const { return (is_exceptional() ? "E_" : "Z_") + std::to_string(index); }

RayId RayId::parse(const std::string& text) {
    if (text.size() < 3 || text[1] != '_' || (text[0] != 'E' && text[0] != 'Z'))
        throw std::invalid_argument("malformed divisor name: " + text);
    const int idx = std::stoi(text.substr(2));
    return text[0] == 'E' ? exceptional(idx) : coordinate(idx);
}

bool in_lattice(const GroupData& g, const LatticePoint& p) {
    if (static_cast<int>(p.size()) != g.n()) return false;
    const int r = g.r();
    std::vector<std::int64_t> scaled;
    for (const auto& c : p) {
        const Rational x = c * r;
        if (!x.is_integer()) return false;
        scaled.push_back(((x.num() % r) + r) % r);
    }
    // the first coordinate fixes the class k of the generator multiple
    const std::int64_t k = scaled[0];
    for (int i = 0; i < g.n(); ++i) {
        const std::int64_t want = g.first_block(i) ? k : (r - k) % r;
        if (scaled[static_cast<std::size_t>(i)] != want) return false;
    }
    return true;
}

bool is_primitive(const GroupData& g, const LatticePoint& p) {
    if (!in_lattice(g, p)) return false;
    std::int64_t bound = 0;
    for (const auto& c : p) bound = std::max(bound, (c * g.r()).abs().num());
    if (bound == 0) return false;
    for (std::int64_t d = 2; d <= bound; ++d) {
        LatticePoint q;
        for (const auto& c : p) q.push_back(c / Rational(d));
        if (in_lattice(g, q)) return false;
    }
    return true;
}

LatticePoint ray_v(const GroupData& g, int t) {
    if (t < 1 || t > g.r() - 1) throw std::out_of_range("ray index t must satisfy 1 <= t <= r-1");
    LatticePoint v;
    for (int i = 0; i < g.n(); ++i) v.emplace_back(g.first_block(i) ? g.r() - t : t, g.r());
    return v;
}

LatticePoint ray_coords(const GroupData& g, RayId id) {
    if (id.is_exceptional()) return ray_v(g, id.index);
    if (id.index < 1 || id.index > g.n()) throw std::out_of_range("coordinate ray index out of range");
    LatticePoint e(static_cast<std::size_t>(g.n()));
    e[static_cast<std::size_t>(id.index - 1)] = 1;
    return e;
}

bool Cone::contains_ray(RayId id) const { return std::binary_search(ray_ids.begin(), ray_ids.end(), id); }

RatMatrix Cone::matrix() const {
    const std::size_t n = rays.empty() ? 0 : rays.front().size();
    return RatMatrix::from_rows(rays, n);
}

Cone make_cone(const GroupData& g, std::vector<RayId> ids) {
    std::sort(ids.begin(), ids.end());
    Cone c;
    c.ray_ids = std::move(ids);
    for (auto id : c.ray_ids) c.rays.push_back(ray_coords(g, id));
    return c;
}

std::vector<Rational> cone_coordinates(const Cone& c, const LatticePoint& point) {
    // transpose: columns are the ray generators
    const std::size_t n = point.size();
    if (static_cast<std::size_t>(c.dim()) != n) throw DimensionError("cone is not full-dimensional");
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = c.rays[j][i];
    std::vector<Rational> lambda;
    if (!solve(m, point, lambda)) return {};
    return lambda;
}

bool cone_contains(const Cone& c, const LatticePoint& point) {
    const auto lambda = cone_coordinates(c, point);
    if (lambda.empty()) return false;
    return std::all_of(lambda.begin(), lambda.end(), [](const Rational& x) { return x.sign() >= 0; });
}

Fan star_subdivide(const GroupData& g, const Fan& fan, RayId new_ray) {
    const LatticePoint v = ray_coords(g, new_ray);
    Fan out;
    for (const auto& cone : fan.maximal_cones) {
        if (cone.contains_ray(new_ray)) throw std::logic_error("ray " + new_ray.str() + " already in the fan");
        const auto lambda = cone_coordinates(cone, v);
        if (lambda.empty()) throw std::logic_error("non-simplicial cone in star subdivision");
        const bool inside = std::all_of(lambda.begin(), lambda.end(), [](const Rational& x) { return x.sign() >= 0; });
        if (!inside) {
            out.maximal_cones.push_back(cone);
            continue;
        }
        // facets avoiding v are exactly those dropping a ray with positive coefficient
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            if (lambda[i].sign() <= 0) continue;
            auto ids = cone.ray_ids;
            ids[i] = new_ray;
            out.maximal_cones.push_back(make_cone(g, std::move(ids)));
        }
    }
    std::sort(out.maximal_cones.begin(), out.maximal_cones.end(),
              [](const Cone& a, const Cone& b) { return a.ray_ids < b.ray_ids; });
    return out;
}

Fan resolution_fan(const GroupData& g) {
    Fan fan;
    std::vector<RayId> orthant;
    for (int i = 1; i <= g.n(); ++i) orthant.push_back(RayId::coordinate(i));
    fan.maximal_cones.push_back(make_cone(g, orthant));
    for (int t = 1; t <= g.r() - 1; ++t) fan = star_subdivide(g, fan, RayId::exceptional(t));
    return fan;
}

Rational cone_volume(const Cone& c) { return determinant(c.matrix()).abs(); }

bool cone_is_smooth(const GroupData& g, const Cone& c) {
    if (c.dim() != g.n()) throw DimensionError("smoothness test needs a full-dimensional cone");
    for (const auto& ray : c.rays)
        if (!is_primitive(g, ray)) return false;
    // N has index r over Z^n
    return cone_volume(c) == Rational(1, g.r());
}

Rational valuation(const GroupData& g, const Monomial& m, int t) {
    if (t < 1 || t > g.r() - 1) throw std::out_of_range("ray index t must satisfy 1 <= t <= r-1");
    if (m.size() != g.n()) throw DimensionError("monomial has the wrong number of variables");
    const int a = first_block_degree(g, m);
    const int b = second_block_degree(g, m);
    return Rational(static_cast<std::int64_t>(g.r() - t) * a + static_cast<std::int64_t>(t) * b, g.r());
}

Rational Divisor::coefficient(RayId id) const {
    auto it = terms_.find(id);
    return it == terms_.end() ? Rational() : it->second;
}

void Divisor::add(RayId id, const Rational& c) {
    Rational sum = coefficient(id) + c;
    if (sum.is_zero())
        terms_.erase(id);
    else
        terms_[id] = sum;
}

std::set<int> Divisor::exceptional_support() const {
    std::set<int> out;
    for (const auto& [id, c] : terms_)
        if (id.is_exceptional()) out.insert(id.index);
    return out;
}

bool Divisor::is_effective() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.sign() > 0; });
}

Divisor& Divisor::operator+=(const Divisor& o) {
    for (const auto& [id, c] : o.terms_) add(id, c);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    for (const auto& [id, c] : o.terms_) add(id, -c);
    return *this;
}

std::string Divisor::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [id, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += (c == Rational(1) ? "" : c.str() + "*") + id.str();
    }
    return out;
}

Divisor principal_divisor(const GroupData& g, int i) {
    if (i < 1 || i > g.n()) throw std::out_of_range("coordinate index must satisfy 1 <= i <= n");
    Divisor d;
    d.add(RayId::coordinate(i), 1);
    const Monomial zi = Monomial::variable(g.n(), i - 1);
    for (int t = 1; t <= g.r() - 1; ++t) d.add(RayId::exceptional(t), valuation(g, zi, t));
    return d;
}

std::vector<Rational> discrepancies(const GroupData& g) {
    std::vector<Rational> out;
    for (int j = 1; j <= g.r() - 1; ++j) {
        Rational sum;
        for (const auto& c : ray_v(g, j)) sum += c;
        out.push_back(sum - 1);
    }
    return out;
}

std::vector<Rational> discrepancy_formula(const GroupData& g) {
    std::vector<Rational> out;
    const int s = g.s(), n = g.n(), r = g.r();
    for (int j = 1; j <= r - 1; ++j) out.push_back(Rational(n - s - 1) + Rational(static_cast<std::int64_t>(j) * (2 * s - n), r));
    return out;
}

std::set<std::pair<int, int>> intersection_graph(const Fan& fan) {
    std::set<std::pair<int, int>> edges;
    for (const auto& cone : fan.maximal_cones) {
        std::vector<int> ex;
        for (auto id : cone.ray_ids)
            if (id.is_exceptional()) ex.push_back(id.index);
        for (std::size_t a = 0; a < ex.size(); ++a)
            for (std::size_t b = a + 1; b < ex.size(); ++b) edges.emplace(std::min(ex[a], ex[b]), std::max(ex[a], ex[b]));
    }
    return edges;
}

std::vector<int> exceptional_star_sizes(const GroupData& g, const Fan& fan) {
    std::vector<int> out(static_cast<std::size_t>(g.r() - 1), 0);
    for (const auto& cone : fan.maximal_cones)
        for (auto id : cone.ray_ids)
            if (id.is_exceptional()) ++out[static_cast<std::size_t>(id.index - 1)];
    return out;
}

bool on_exceptional_plane(const GroupData& g, const LatticePoint& p) {
    if (static_cast<int>(p.size()) != g.n()) return false;
    const int s = g.s(), n = g.n();
    for (int i = 1; i < s; ++i)
        if (p[static_cast<std::size_t>(i)] != p[0]) return false;
    for (int j = s + 1; j < n; ++j)
        if (p[static_cast<std::size_t>(j)] != p[static_cast<std::size_t>(s)]) return false;
    Rational first, second;
    for (int i = 0; i < s; ++i) first += p[static_cast<std::size_t>(i)];
    for (int j = s; j < n; ++j) second += p[static_cast<std::size_t>(j)];
    return first / Rational(s) + second / Rational(n - s) == Rational(1);
}

bool coplanarity_check(const GroupData& g) {
    for (int t = 1; t <= g.r() - 1; ++t)
        if (!on_exceptional_plane(g, ray_v(g, t))) return false;
    return true;
}

SingularityType singularity_type_over(const GroupData& g, int k_min, int k_max) {
    SingularityType st;
    const int s = g.s(), n = g.n(), r = g.r();
    for (int k = k_min; k <= k_max; ++k)
        st.ages.emplace_back(static_cast<std::int64_t>(s) * k + static_cast<std::int64_t>(n - s) * (r - k), r);
    st.canonical = std::all_of(st.ages.begin(), st.ages.end(), [](const Rational& a) { return a >= Rational(1); });
    st.terminal = std::all_of(st.ages.begin(), st.ages.end(), [](const Rational& a) { return a > Rational(1); });
    st.gorenstein = ((2 * s - n) % r + r) % r == 0;
    return st;
}

SingularityType singularity_type(const GroupData& g) { return singularity_type_over(g, 1, g.r() - 1); }

std::vector<Monomial> invariant_generators(const GroupData& g) {
    std::vector<Monomial> gens;
    for (const auto& m : monomials_up_to_degree(g.n(), g.r())) {
        if (m.degree() == 0 || weight(g, m).k() != 0) continue;
        const bool reducible = std::any_of(gens.begin(), gens.end(), [&](const Monomial& q) { return q.divides(m); });
        if (!reducible) gens.push_back(m);
    }
    return gens;
}

bool invariant_degree_bound_holds(const GroupData& g, const std::vector<Monomial>& gens, int max_degree) {
    for (const auto& m : monomials_up_to_degree(g.n(), max_degree)) {
        if (m.degree() == 0 || weight(g, m).k() != 0) continue;
        if (std::none_of(gens.begin(), gens.end(), [&](const Monomial& q) { return q.divides(m); })) return false;
    }
    return true;
}

FanCheck check_fan(const GroupData& g, const Fan& fan) {
    FanCheck out;
    const int n = g.n();
    std::set<RayId> all_rays;
    for (const auto& cone : fan.maximal_cones) {
        if (cone.dim() != n) {
            out.all_full_dimensional = false;
            continue;
        }
        if (determinant(cone.matrix()).is_zero()) out.all_simplicial = false;
        for (std::size_t i = 0; i < cone.rays.size(); ++i) {
            all_rays.insert(cone.ray_ids[i]);
            if (!is_primitive(g, cone.rays[i])) out.rays_primitive = false;
        }
        out.raw_volume_sum += cone_volume(cone);

        std::vector<RatVector> normalized;
        for (const auto& ray : cone.rays) {
            Rational total;
            for (const auto& c : ray) total += c;
            RatVector scaled;
            for (const auto& c : ray) scaled.push_back(c / total);
            normalized.push_back(std::move(scaled));
        }
        out.normalized_volume_sum += determinant(RatMatrix::from_rows(normalized, static_cast<std::size_t>(n))).abs();
    }
    if (!out.all_full_dimensional || !out.all_simplicial) return out;

    for (const auto& cone : fan.maximal_cones)
        for (auto id : all_rays)
            if (!cone.contains_ray(id) && cone_contains(cone, ray_coords(g, id))) out.face_compatible = false;

    // facet -> (cone index, opposite ray)
    std::map<std::vector<RayId>, std::vector<std::pair<std::size_t, RayId>>> facets;
    for (std::size_t c = 0; c < fan.maximal_cones.size(); ++c) {
        const auto& ids = fan.maximal_cones[c].ray_ids;
        for (std::size_t drop = 0; drop < ids.size(); ++drop) {
            std::vector<RayId> facet;
            for (std::size_t k = 0; k < ids.size(); ++k)
                if (k != drop) facet.push_back(ids[k]);
            facets[facet].emplace_back(c, ids[drop]);
        }
    }
    for (const auto& [facet, owners] : facets) {
        if (owners.size() > 2) {
            out.facets_separated = false;
        } else if (owners.size() == 2) {
            auto side = [&](RayId apex) {
                std::vector<RatVector> rows;
                for (auto id : facet) rows.push_back(ray_coords(g, id));
                rows.push_back(ray_coords(g, apex));
                return determinant(RatMatrix::from_rows(rows, static_cast<std::size_t>(n))).sign();
            };
            if (side(owners[0].second) * side(owners[1].second) != -1) out.facets_separated = false;
        } else {
            // an unshared facet must lie on a coordinate hyperplane of the orthant
            bool on_boundary = false;
            for (int i = 0; i < n && !on_boundary; ++i) {
                on_boundary = std::all_of(facet.begin(), facet.end(), [&](RayId id) {
                    return ray_coords(g, id)[static_cast<std::size_t>(i)].is_zero();
                });
            }
            if (!on_boundary) out.facets_separated = false;
        }
    }
    return out;
}

}  // namespace cqh
