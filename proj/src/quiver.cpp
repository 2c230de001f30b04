#include "cqhilb/quiver.hpp"

#include <algorithm>
#include <deque>

#include "cqhilb/mckay.hpp"

namespace cqh {

namespace {

int mod(int a, int r) { return ((a % r) + r) % r; }

int vertex_of(const GroupData& g, const Monomial& m) {
    return mod(first_block_degree(g, m) - second_block_degree(g, m), g.r());
}

}  // namespace

std::string Arrow::str() const {
    return (direction == Direction::Up ? "up" : "down") + std::to_string(copy) + "@" + std::to_string(source);
}

McKayQuiver::McKayQuiver(const GroupData& g) : g_(g) {
    for (int k = 0; k < g.r(); ++k) {
        for (int i = 1; i <= g.s(); ++i) arrows_.push_back({Arrow::Direction::Up, i, k});
        for (int j = 1; j <= g.n() - g.s(); ++j) arrows_.push_back({Arrow::Direction::Down, j, k});
    }
    std::sort(arrows_.begin(), arrows_.end());
}

int McKayQuiver::target(const Arrow& a) const {
    return mod(a.source + (a.direction == Arrow::Direction::Up ? 1 : -1), g_.r());
}

Arrow McKayQuiver::coordinate_arrow(int i, int k) const {
    if (i < 1 || i > g_.n()) throw std::out_of_range("coordinate index out of range");
    if (i <= g_.s()) return {Arrow::Direction::Up, i, mod(k, g_.r())};
    return {Arrow::Direction::Down, i - g_.s(), mod(k, g_.r())};
}

int McKayQuiver::arrow_count(int k, int l) const {
    return static_cast<int>(std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) {
        return a.source == mod(k, g_.r()) && target(a) == mod(l, g_.r());
    }));
}

McKayQuiver build_quiver(const GroupData& g) { return McKayQuiver(g); }

QuiverRep constant_rep(const McKayQuiver& q, const Rational& value) {
    QuiverRep rep;
    for (const auto& a : q.arrows()) rep.emplace(a, value);
    return rep;
}

QuiverRep rep_with_support(const McKayQuiver& q, const std::set<Arrow>& support) {
    QuiverRep rep;
    for (const auto& a : q.arrows()) rep.emplace(a, support.count(a) ? Rational(1) : Rational(0));
    return rep;
}

bool check_relations(const McKayQuiver& q, const QuiverRep& rep) {
    auto scalar = [&](const Arrow& a) -> const Rational& {
        auto it = rep.find(a);
        if (it == rep.end()) throw MissingArrow("no scalar assigned to arrow " + a.str());
        return it->second;
    };
    for (const auto& a : q.arrows()) scalar(a);

    const int n = q.group().n();
    for (int k = 0; k < q.vertices(); ++k) {
        for (int p = 1; p <= n; ++p) {
            for (int c = p + 1; c <= n; ++c) {
                const Arrow p_first = q.coordinate_arrow(p, k);
                const Arrow c_second = q.coordinate_arrow(c, q.target(p_first));
                const Arrow c_first = q.coordinate_arrow(c, k);
                const Arrow p_second = q.coordinate_arrow(p, q.target(c_first));
                if (scalar(p_first) * scalar(c_second) != scalar(c_first) * scalar(p_second)) return false;
            }
        }
    }
    return true;
}

bool is_stable(const McKayQuiver& q, const QuiverRep& rep) {
    std::vector<bool> seen(static_cast<std::size_t>(q.vertices()), false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (const auto& [a, value] : rep) {
            if (a.source != v || value.is_zero()) continue;
            const int w = q.target(a);
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                queue.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::set<Arrow> support(const QuiverRep& rep) {
    std::set<Arrow> out;
    for (const auto& [a, value] : rep)
        if (!value.is_zero()) out.insert(a);
    return out;
}

bool support_is_acyclic(const McKayQuiver& q, const QuiverRep& rep) {
    // Kahn's algorithm on the nonzero arrows
    const auto arrows = support(rep);
    std::vector<int> in_degree(static_cast<std::size_t>(q.vertices()), 0);
    for (const auto& a : arrows) ++in_degree[static_cast<std::size_t>(q.target(a))];
    std::vector<int> stack;
    for (int v = 0; v < q.vertices(); ++v)
        if (in_degree[static_cast<std::size_t>(v)] == 0) stack.push_back(v);
    int removed = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++removed;
        for (const auto& a : arrows) {
            if (a.source != v) continue;
            if (--in_degree[static_cast<std::size_t>(q.target(a))] == 0) stack.push_back(q.target(a));
        }
    }
    return removed == q.vertices();
}

std::set<Arrow> chart_unit_arrows(const McKayQuiver& q, const FixedPointLabel& label) {
    const int r = q.vertices();
    std::set<Arrow> out;
    auto up_chain = [&](int copy, int stages) {
        for (int k = 0; k < stages; ++k) out.insert({Arrow::Direction::Up, copy, k});
    };
    auto down_chain = [&](int copy, int stages) {
        for (int k = 0; k < stages; ++k) out.insert({Arrow::Direction::Down, copy, mod(-k, r)});
    };
    if (const auto* in = std::get_if<Interior>(&label)) {
        up_chain(in->i, in->t - 1);
        down_chain(in->j, r - in->t);
    } else if (const auto* bx = std::get_if<BoundaryX>(&label)) {
        down_chain(bx->j, r - 1);
    } else {
        up_chain(std::get<BoundaryY>(label).i, r - 1);
    }
    return out;
}

FixedPointRep rep_from_fixed_point(const McKayQuiver& q, const FixedPointIdeal& p) {
    const GroupData& g = q.group();
    const GGraph gamma = companion_graph(g, p);
    const std::set<Monomial> standard(gamma.monomials.begin(), gamma.monomials.end());

    std::set<Arrow> nonzero;
    for (const auto& m : gamma.monomials)
        for (int i = 1; i <= g.n(); ++i)
            if (standard.count(m * Monomial::variable(g.n(), i - 1))) nonzero.insert(q.coordinate_arrow(i, vertex_of(g, m)));

    FixedPointRep out{rep_with_support(q, nonzero), Chart{p.label, chart_unit_arrows(q, p.label)}};
    const std::string name = label_str(p.label);
    if (out.chart.unit_arrows != nonzero) throw ConsistencyError("cluster representation of " + name + " differs from its chart");
    if (!check_relations(q, out.rep)) throw ConsistencyError("representation of " + name + " violates the relations");
    if (!is_stable(q, out.rep)) throw ConsistencyError("representation of " + name + " is unstable");
    return out;
}

std::set<int> divisor_membership(const McKayQuiver& q, const QuiverRep& rep) {
    if (!is_stable(q, rep)) throw std::domain_error("divisor membership needs a stable representation");
    std::set<int> out;
    if (!support_is_acyclic(q, rep)) return out;
    const auto arrows = support(rep);
    for (int v = 1; v < q.vertices(); ++v) {
        const bool sink = std::none_of(arrows.begin(), arrows.end(), [&](const Arrow& a) { return a.source == v; });
        if (sink) out.insert(v);
    }
    return out;
}

bool ConnectednessWitness::passed() const {
    return relations && stable &&
           std::all_of(charts.begin(), charts.end(), [](const ChartVerdict& c) { return c.contains_witness; });
}

ConnectednessWitness connectedness_witness(const GroupData& g) {
    const McKayQuiver q(g);
    const QuiverRep ones = constant_rep(q, 1);
    ConnectednessWitness w;
    w.relations = check_relations(q, ones);
    w.stable = is_stable(q, ones);
    for (const auto& p : enumerate_fixed_points(g)) {
        const auto units = chart_unit_arrows(q, p.label);
        const bool inside = std::all_of(units.begin(), units.end(), [&](const Arrow& a) { return !ones.at(a).is_zero(); });
        w.charts.push_back({p.label, inside});
    }
    return w;
}

SinkPatternScan sink_pattern_scan(const GroupData& g) {
    const McKayQuiver q(g);
    const auto& arrows = q.arrows();
    if (arrows.size() > 20) throw std::invalid_argument("sink pattern scan limited to 20 arrows");
    SinkPatternScan scan;
    for (unsigned long mask = 0; mask < (1ul << arrows.size()); ++mask) {
        ++scan.supports_examined;
        std::set<Arrow> chosen;
        for (std::size_t b = 0; b < arrows.size(); ++b)
            if (mask & (1ul << b)) chosen.insert(arrows[b]);
        const QuiverRep rep = rep_with_support(q, chosen);
        if (!is_stable(q, rep) || !support_is_acyclic(q, rep)) continue;
        ++scan.stable_acyclic;
        if (check_relations(q, rep)) ++scan.with_relations;
        const auto sinks = divisor_membership(q, rep);
        scan.sink_sets.insert(sinks);
        const bool ok = sinks.size() == 1 || (sinks.size() == 2 && *sinks.rbegin() - *sinks.begin() == 1);
        if (!ok) ++scan.violations;
    }
    return scan;
}

}  // namespace cqh
