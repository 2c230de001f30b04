#include <doctest.h>

#include "cqhilb/quiver.hpp"
#include "gen.hpp"

using cqh::Arrow;
using cqh::GroupData;
using cqh::McKayQuiver;
using cqh::Rational;

TEST_CASE("arrow counts") {
    const McKayQuiver q(GroupData::validate(1, 2, 4));
    for (int k = 0; k < 4; ++k) {
        CHECK(q.arrow_count(k, (k + 1) % 4) == 1);
        CHECK(q.arrow_count(k, (k + 3) % 4) == 1);
        CHECK(q.arrow_count(k, k) == 0);
    }
    const McKayQuiver q2(GroupData::validate(1, 3, 2));
    // up and down coincide for r = 2
    CHECK(q2.arrow_count(0, 1) == 3);
}

TEST_CASE("relations and stability") {
    const McKayQuiver q(GroupData::validate(2, 3, 5));
    CHECK(cqh::check_relations(q, cqh::constant_rep(q, 1)));
    CHECK(cqh::is_stable(q, cqh::constant_rep(q, 1)));
    CHECK(cqh::check_relations(q, cqh::constant_rep(q, 0)));
    CHECK_FALSE(cqh::is_stable(q, cqh::constant_rep(q, 0)));
    auto rep = cqh::constant_rep(q, 1);
    rep[Arrow{Arrow::Direction::Up, 1, 0}] = Rational(2);
    CHECK_FALSE(cqh::check_relations(q, rep));
    rep.erase(Arrow{Arrow::Direction::Up, 1, 0});
    CHECK_THROWS_AS(cqh::check_relations(q, rep), cqh::MissingArrow);
    CHECK_THROWS_AS(cqh::divisor_membership(q, cqh::constant_rep(q, 0)), std::domain_error);
    // a cyclic support sits on no divisor
    CHECK(cqh::divisor_membership(q, cqh::constant_rep(q, 1)).empty());
}

TEST_CASE("fixed-point representations have the chart support and the fan's divisors") {
    const auto g = GroupData::validate(2, 3, 5);
    const McKayQuiver q(g);
    const auto interior = cqh::rep_from_fixed_point(q, cqh::fixed_point_ideal(g, cqh::Interior{1, 1, 3}));
    CHECK(cqh::support_is_acyclic(q, interior.rep));
    CHECK(cqh::divisor_membership(q, interior.rep) == std::set<int>{2, 3});
    const auto bx = cqh::rep_from_fixed_point(q, cqh::fixed_point_ideal(g, cqh::BoundaryX{1}));
    CHECK(cqh::divisor_membership(q, bx.rep) == std::set<int>{1});
    const auto by = cqh::rep_from_fixed_point(q, cqh::fixed_point_ideal(g, cqh::BoundaryY{1}));
    CHECK(cqh::divisor_membership(q, by.rep) == std::set<int>{4});
    for (const auto& h : gen::triples(5, 7)) {
        const McKayQuiver qh(h);
        for (const auto& p : cqh::enumerate_fixed_points(h))
            CHECK(static_cast<int>(cqh::rep_from_fixed_point(qh, p).chart.unit_arrows.size()) == h.r() - 1);
        CHECK(cqh::connectedness_witness(h).passed());
    }
}

TEST_CASE("exhaustive sink patterns never skip a divisor") {
    for (const auto& g : gen::triples(3, 5)) {
        const auto scan = cqh::sink_pattern_scan(g);
        CHECK(scan.violations == 0);
        CHECK(scan.stable_acyclic > 0);
    }
    CHECK_THROWS_AS(cqh::sink_pattern_scan(GroupData::validate(2, 4, 6)), std::invalid_argument);
}
