#include "cqhilb/ghilb.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cqh {

std::string GGraph::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < monomials.size(); ++i) out += (i ? ", " : "") + monomials[i].str();
    return out + "}";
}

bool is_ggraph(const GroupData& g, const std::vector<Monomial>& monomials) {
    if (static_cast<int>(monomials.size()) != g.r()) return false;
    std::set<Monomial> members(monomials.begin(), monomials.end());
    if (members.size() != monomials.size() || !members.count(Monomial::one(g.n()))) return false;
    std::set<int> weights;
    for (const auto& m : monomials) {
        if (m.size() != g.n()) return false;
        weights.insert(weight(g, m).k());
        for (int i = 0; i < g.n(); ++i) {
            if (m.exponents[static_cast<std::size_t>(i)] == 0) continue;
            if (!members.count(m / Monomial::variable(g.n(), i))) return false;
        }
    }
    return static_cast<int>(weights.size()) == g.r();
}

std::string label_str(const FixedPointLabel& label) {
    return std::visit(
        [](const auto& l) -> std::string {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, Interior>)
                return "Interior(" + std::to_string(l.i) + "," + std::to_string(l.j) + "," + std::to_string(l.t) + ")";
            else if constexpr (std::is_same_v<T, BoundaryX>)
                return "BoundaryX(" + std::to_string(l.j) + ")";
            else
                return "BoundaryY(" + std::to_string(l.i) + ")";
        },
        label);
}

FixedPointLabel parse_label(const std::string& text) {
    const auto open = text.find('(');
    if (open == std::string::npos || text.back() != ')') throw std::invalid_argument("malformed label: " + text);
    const std::string head = text.substr(0, open);
    std::vector<int> args;
    std::stringstream body(text.substr(open + 1, text.size() - open - 2));
    for (std::string part; std::getline(body, part, ',');) args.push_back(std::stoi(part));
    if (head == "Interior" && args.size() == 3) return Interior{args[0], args[1], args[2]};
    if (head == "BoundaryX" && args.size() == 1) return BoundaryX{args[0]};
    if (head == "BoundaryY" && args.size() == 1) return BoundaryY{args[0]};
    throw std::invalid_argument("malformed label: " + text);
}

FixedPointIdeal fixed_point_ideal(const GroupData& g, const FixedPointLabel& label) {
    const int s = g.s(), n = g.n(), r = g.r();
    // exponent of each variable's pure power among the generators
    std::vector<int> pure(static_cast<std::size_t>(n), 1);
    bool mixed = false;
    int yi = -1, xj = -1;
    if (const auto* in = std::get_if<Interior>(&label)) {
        if (in->i < 1 || in->i > s || in->j < 1 || in->j > n - s || in->t < 2 || in->t > r - 1)
            throw InvalidFixedPoint("interior label out of range: " + label_str(label));
        yi = in->i - 1;
        xj = s + in->j - 1;
        pure[static_cast<std::size_t>(yi)] = in->t;
        pure[static_cast<std::size_t>(xj)] = r - in->t + 1;
        mixed = true;
    } else if (const auto* bx = std::get_if<BoundaryX>(&label)) {
        if (bx->j < 1 || bx->j > n - s) throw InvalidFixedPoint("boundary label out of range: " + label_str(label));
        pure[static_cast<std::size_t>(s + bx->j - 1)] = r;
    } else {
        const auto& by = std::get<BoundaryY>(label);
        if (by.i < 1 || by.i > s) throw InvalidFixedPoint("boundary label out of range: " + label_str(label));
        pure[static_cast<std::size_t>(by.i - 1)] = r;
    }
    FixedPointIdeal p{{}, label};
    for (int v = 0; v < n; ++v) p.generators.push_back(Monomial::variable(n, v, pure[static_cast<std::size_t>(v)]));
    if (mixed) {
        Monomial yx = Monomial::one(n);
        yx.exponents[static_cast<std::size_t>(yi)] = 1;
        yx.exponents[static_cast<std::size_t>(xj)] = 1;
        p.generators.push_back(yx);
    }
    std::sort(p.generators.begin(), p.generators.end());
    return p;
}

std::vector<FixedPointIdeal> enumerate_fixed_points(const GroupData& g) {
    std::vector<FixedPointIdeal> out;
    for (int i = 1; i <= g.s(); ++i)
        for (int j = 1; j <= g.n() - g.s(); ++j)
            for (int t = 2; t <= g.r() - 1; ++t) out.push_back(fixed_point_ideal(g, Interior{i, j, t}));
    for (int j = 1; j <= g.n() - g.s(); ++j) out.push_back(fixed_point_ideal(g, BoundaryX{j}));
    for (int i = 1; i <= g.s(); ++i) out.push_back(fixed_point_ideal(g, BoundaryY{i}));
    return out;
}

std::vector<Monomial> standard_monomials(const std::vector<Monomial>& generators) {
    if (generators.empty()) throw InvalidFixedPoint("ideal has no generators");
    const int n = generators.front().size();
    std::vector<int> box(static_cast<std::size_t>(n), -1);
    for (const auto& gen : generators) {
        int support = 0, var = -1;
        for (int v = 0; v < n; ++v)
            if (gen.exponents[static_cast<std::size_t>(v)] > 0) ++support, var = v;
        if (support == 1) {
            auto& b = box[static_cast<std::size_t>(var)];
            const int e = gen.exponents[static_cast<std::size_t>(var)];
            b = b < 0 ? e : std::min(b, e);
        }
    }
    if (std::any_of(box.begin(), box.end(), [](int b) { return b < 0; }))
        throw InvalidFixedPoint("ideal is not of finite colength");

    std::vector<Monomial> out;
    Monomial m = Monomial::one(n);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            if (std::none_of(generators.begin(), generators.end(), [&](const Monomial& q) { return q.divides(m); }))
                out.push_back(m);
            return;
        }
        for (int e = 0; e < box[static_cast<std::size_t>(v)]; ++e) {
            m.exponents[static_cast<std::size_t>(v)] = e;
            self(self, v + 1);
        }
        m.exponents[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

GGraph companion_graph(const GroupData& g, const FixedPointIdeal& p) {
    auto std_monomials = standard_monomials(p.generators);
    if (!is_ggraph(g, std_monomials)) throw InvalidFixedPoint("standard monomials of " + label_str(p.label) + " are not a G-graph");
    return GGraph{std::move(std_monomials)};
}

std::vector<GGraph> search_ggraphs(const GroupData& g, int exponent_cap) {
    if (exponent_cap < g.r()) throw ConfigurationError("exponent cap must be at least r");
    const int n = g.n(), r = g.r();
    std::vector<GGraph> found;
    std::vector<Monomial> current{Monomial::one(n)};
    std::set<Monomial> members{Monomial::one(n)};
    std::vector<bool> used(static_cast<std::size_t>(r), false);
    used[0] = true;

    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == r) {
            auto sorted = current;
            std::sort(sorted.begin(), sorted.end());
            found.push_back(GGraph{std::move(sorted)});
            return;
        }
        // candidates: one variable beyond a member, above the last added monomial
        std::set<Monomial> candidates;
        for (const auto& m : current) {
            for (int v = 0; v < n; ++v) {
                Monomial c = m * Monomial::variable(n, v);
                if (c.exponents[static_cast<std::size_t>(v)] > exponent_cap) continue;
                if (members.count(c) || !(current.back() < c)) continue;
                candidates.insert(c);
            }
        }
        for (const auto& c : candidates) {
            const int w = weight(g, c).k();
            if (used[static_cast<std::size_t>(w)]) continue;
            bool closed = true;
            for (int v = 0; v < n && closed; ++v)
                if (c.exponents[static_cast<std::size_t>(v)] > 0) closed = members.count(c / Monomial::variable(n, v)) > 0;
            if (!closed) continue;
            current.push_back(c);
            members.insert(c);
            used[static_cast<std::size_t>(w)] = true;
            self(self);
            used[static_cast<std::size_t>(w)] = false;
            members.erase(c);
            current.pop_back();
        }
    };
    rec(rec);
    std::sort(found.begin(), found.end());
    return found;
}

int tangent_dimension(const GroupData& g, const FixedPointIdeal& p) {
    const GGraph gamma = companion_graph(g, p);
    const std::set<Monomial> standard(gamma.monomials.begin(), gamma.monomials.end());
    std::map<int, Monomial> by_weight;
    for (const auto& m : gamma.monomials) by_weight.emplace(weight(g, m).k(), m);

    const auto& gens = p.generators;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = 0; b < gens.size(); ++b)
            if (a != b && gens[a].divides(gens[b])) throw InvalidFixedPoint("generators are not minimal");

    // image of generator k is c_k * std(wt(gen_k))
    std::vector<Monomial> image;
    for (const auto& gen : gens) image.push_back(by_weight.at(weight(g, gen).k()));

    std::vector<RatVector> rows;
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            const Monomial l = gens[a].lcm(gens[b]);
            // both sides land in the weight class of l; a product outside Gamma is zero in R/I
            RatVector row(gens.size());
            if (standard.count((l / gens[a]) * image[a])) row[a] += 1;
            if (standard.count((l / gens[b]) * image[b])) row[b] -= 1;
            if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return !x.is_zero(); })) rows.push_back(row);
        }
    }
    if (rows.empty()) return static_cast<int>(gens.size());
    const auto ns = nullspace(RatMatrix::from_rows(rows, gens.size()));
    return static_cast<int>(ns.basis.size());
}

GGraph cone_ggraph(const GroupData& g, const Cone& cone) {
    const int r = g.r();
    // every weight class has a pairing-minimal representative of degree < r
    std::map<int, std::vector<std::pair<Monomial, std::vector<Rational>>>> classes;
    for (const auto& m : monomials_up_to_degree(g.n(), r - 1)) {
        std::vector<Rational> pairing;
        for (const auto& ray : cone.rays) {
            Rational sum;
            for (int i = 0; i < g.n(); ++i) sum += ray[static_cast<std::size_t>(i)] * m.exponents[static_cast<std::size_t>(i)];
            pairing.push_back(sum);
        }
        classes[weight(g, m).k()].emplace_back(m, std::move(pairing));
    }

    std::vector<Monomial> chosen;
    for (int k = 0; k < r; ++k) {
        const auto& members = classes[k];
        std::vector<Rational> best;
        for (std::size_t ray = 0; ray < cone.rays.size(); ++ray) {
            Rational lo = members.front().second[ray];
            for (const auto& [m, pairing] : members) lo = std::min(lo, pairing[ray]);
            best.push_back(lo);
        }
        std::vector<Monomial> minimizers;
        for (const auto& [m, pairing] : members)
            if (pairing == best) minimizers.push_back(m);
        if (minimizers.size() != 1) {
            throw MatchFailure(minimizers.empty() ? "no simultaneous minimizer in weight class " + std::to_string(k)
                                                  : "non-unique minimizer in weight class " + std::to_string(k),
                               cone.ray_ids);
        }
        chosen.push_back(minimizers.front());
    }
    std::sort(chosen.begin(), chosen.end());
    return GGraph{std::move(chosen)};
}

std::vector<ConeMatch> match_cones_to_ggraphs(const GroupData& g, const Fan& fan, const std::vector<GGraph>& graphs) {
    std::vector<ConeMatch> out;
    std::vector<bool> hit(graphs.size(), false);
    for (std::size_t c = 0; c < fan.maximal_cones.size(); ++c) {
        const GGraph gamma = cone_ggraph(g, fan.maximal_cones[c]);
        auto it = std::find(graphs.begin(), graphs.end(), gamma);
        if (it == graphs.end())
            throw MatchFailure("cone G-graph " + gamma.str() + " is not an enumerated fixed point", fan.maximal_cones[c].ray_ids);
        const auto idx = static_cast<std::size_t>(it - graphs.begin());
        if (hit[idx]) throw MatchFailure("two cones share the G-graph " + gamma.str(), fan.maximal_cones[c].ray_ids);
        hit[idx] = true;
        out.push_back({c, idx});
    }
    if (out.size() != graphs.size()) throw MatchFailure("cone count differs from G-graph count", {});
    return out;
}

}  // namespace cqh
