#include <doctest.h>

#include <algorithm>

#include "cqhilb/action.hpp"
#include "gen.hpp"

using cqh::CharIndex;
using cqh::GroupData;
using cqh::Monomial;

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(GroupData::validate(0, 2, 3), cqh::ParameterError);
    CHECK_THROWS_AS(GroupData::validate(2, 2, 3), cqh::ParameterError);
    CHECK_THROWS_AS(GroupData::validate(1, 2, 1), cqh::ParameterError);
    CHECK_NOTHROW(GroupData::validate(1, 2, 2));
}

TEST_CASE("weights are r-1 on the first block and 1 on the second") {
    const auto g = GroupData::validate(2, 3, 5);
    CHECK(g.weights() == std::vector<int>{4, 4, 1});
    CHECK(cqh::weight(g, Monomial({1, 0, 0})) == CharIndex(4, 5));
    CHECK(cqh::weight(g, Monomial({1, 0, 1})) == CharIndex(0, 5));
    CHECK(cqh::weight(g, Monomial({0, 0, 5})) == CharIndex(0, 5));
    CHECK_THROWS_AS(cqh::weight(g, Monomial({1, 0})), cqh::DimensionError);
}

TEST_CASE("weight is a homomorphism from monomials to characters") {
    for (const auto& g : gen::triples(5, 7)) {
        for (int trial = 0; trial < 20; ++trial) {
            const Monomial a = gen::monomial(g.n(), 6), b = gen::monomial(g.n(), 6);
            CHECK(cqh::weight(g, a * b) == cqh::char_combine(cqh::weight(g, a), cqh::weight(g, b)));
            CHECK(cqh::weight(g, a).k() == ((cqh::second_block_degree(g, a) - cqh::first_block_degree(g, a)) % g.r() + g.r()) % g.r());
        }
    }
}

TEST_CASE("characters form a cyclic group") {
    for (int r = 2; r <= 8; ++r) {
        for (int k = 0; k < r; ++k) {
            const CharIndex c(k, r);
            CHECK(cqh::char_combine(c, cqh::char_inverse(c)) == CharIndex(0, r));
        }
        CHECK(CharIndex(-1, r) == CharIndex(r - 1, r));
    }
    CHECK_THROWS(CharIndex(1, 3).combine(CharIndex(1, 4)));
}

TEST_CASE("monomial order extends divisibility and is total") {
    for (int trial = 0; trial < 300; ++trial) {
        const Monomial a = gen::monomial(3, 3), b = gen::monomial(3, 3);
        if (a.divides(b) && !(a == b)) CHECK(a < b);
        CHECK(((a < b) + (b < a) + (a == b)) == 1);
        CHECK((a * b) / b == a);
        CHECK(a.divides(a.lcm(b)));
        CHECK(b.divides(a.lcm(b)));
    }
    CHECK(Monomial({2, 0, 1}).str() == "z_1^2*z_3");
    CHECK(Monomial::one(3).str() == "1");
}

TEST_CASE("monomials up to degree are counted by binomials and sorted") {
    // C(n + d, d)
    CHECK(cqh::monomials_up_to_degree(3, 2).size() == 10);
    CHECK(cqh::monomials_up_to_degree(4, 3).size() == 35);
    const auto all = cqh::monomials_up_to_degree(3, 4);
    CHECK(std::is_sorted(all.begin(), all.end()));
}
