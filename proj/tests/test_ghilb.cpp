#include <doctest.h>

#include <algorithm>
#include <set>

#include "cqhilb/ghilb.hpp"
#include "gen.hpp"

using cqh::GroupData;
using cqh::Monomial;

namespace {

std::vector<std::string> names(const std::vector<Monomial>& ms) {
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(m.str());
    return out;
}

}  // namespace

TEST_CASE("interior fixed point of (2,3,5)") {
    const auto g = GroupData::validate(2, 3, 5);
    const auto p = cqh::fixed_point_ideal(g, cqh::Interior{1, 1, 3});
    std::vector<std::string> gens = names(p.generators);
    std::sort(gens.begin(), gens.end());
    CHECK(gens == std::vector<std::string>{"z_1*z_3", "z_1^3", "z_2", "z_3^3"});
    const auto gamma = cqh::companion_graph(g, p);
    std::vector<std::string> std_names = names(gamma.monomials);
    std::sort(std_names.begin(), std_names.end());
    CHECK(std_names == std::vector<std::string>{"1", "z_1", "z_1^2", "z_3", "z_3^2"});
    CHECK(cqh::tangent_dimension(g, p) == 3);
}

TEST_CASE("boundary fixed points") {
    const auto g = GroupData::validate(2, 3, 5);
    const auto bx = cqh::fixed_point_ideal(g, cqh::BoundaryX{1});
    CHECK(names(bx.generators) == std::vector<std::string>{"z_1", "z_2", "z_3^5"});
    const auto by = cqh::fixed_point_ideal(g, cqh::BoundaryY{2});
    CHECK(cqh::companion_graph(g, by).monomials.size() == 5);
    CHECK_THROWS_AS(cqh::fixed_point_ideal(g, cqh::Interior{1, 1, 5}), cqh::InvalidFixedPoint);
    CHECK_THROWS_AS(cqh::fixed_point_ideal(g, cqh::BoundaryX{2}), cqh::InvalidFixedPoint);
    CHECK_THROWS_AS(cqh::fixed_point_ideal(g, cqh::BoundaryY{3}), cqh::InvalidFixedPoint);
}

TEST_CASE("labels print and parse") {
    for (const cqh::FixedPointLabel& l : {cqh::FixedPointLabel{cqh::Interior{2, 1, 4}}, cqh::FixedPointLabel{cqh::BoundaryX{3}},
                                          cqh::FixedPointLabel{cqh::BoundaryY{1}}})
        CHECK(cqh::parse_label(cqh::label_str(l)) == l);
    CHECK(cqh::label_str(cqh::Interior{1, 1, 4}) == "Interior(1,1,4)");
    CHECK_THROWS(cqh::parse_label("Corner(1)"));
}

TEST_CASE("G-graph predicate") {
    const auto g = GroupData::validate(1, 2, 3);
    CHECK(cqh::is_ggraph(g, {Monomial({0, 0}), Monomial({1, 0}), Monomial({0, 1})}));
    // two monomials of weight 0
    CHECK_FALSE(cqh::is_ggraph(g, {Monomial({0, 0}), Monomial({1, 1}), Monomial({1, 0})}));
    // not closed under division
    CHECK_FALSE(cqh::is_ggraph(g, {Monomial({0, 0}), Monomial({2, 0}), Monomial({0, 1})}));
}

TEST_CASE("search oracle agrees with the classification over a sweep") {
    for (const auto& g : gen::triples(4, 6)) {
        CAPTURE(g.s());
        CAPTURE(g.n());
        CAPTURE(g.r());
        const auto fps = cqh::enumerate_fixed_points(g);
        CHECK(static_cast<int>(fps.size()) == g.s() * (g.n() - g.s()) * (g.r() - 2) + g.n());
        std::vector<cqh::GGraph> mine;
        for (const auto& p : fps) {
            mine.push_back(cqh::companion_graph(g, p));
            CHECK(cqh::is_ggraph(g, mine.back().monomials));
            CHECK(cqh::tangent_dimension(g, p) == g.n());
        }
        std::sort(mine.begin(), mine.end());
        CHECK(cqh::search_ggraphs(g, g.r()) == mine);
        // a larger cap finds nothing new
        CHECK(cqh::search_ggraphs(g, g.r() + 2) == mine);
    }
    CHECK_THROWS_AS(cqh::search_ggraphs(GroupData::validate(1, 2, 4), 3), cqh::ConfigurationError);
}

TEST_CASE("every maximal cone matches exactly one fixed point") {
    for (const auto& g : gen::triples(4, 6)) {
        const auto fan = cqh::resolution_fan(g);
        std::vector<cqh::GGraph> graphs;
        for (const auto& p : cqh::enumerate_fixed_points(g)) graphs.push_back(cqh::companion_graph(g, p));
        const auto matches = cqh::match_cones_to_ggraphs(g, fan, graphs);
        std::set<std::size_t> hit;
        for (const auto& m : matches) hit.insert(m.graph_index);
        CHECK(hit.size() == graphs.size());
    }
}

TEST_CASE("a wrong graph list is a match failure") {
    const auto g = GroupData::validate(1, 2, 3);
    const auto fan = cqh::resolution_fan(g);
    CHECK_THROWS_AS(cqh::match_cones_to_ggraphs(g, fan, {}), cqh::MatchFailure);
}
