#include <doctest.h>

#include "cqhilb/verify.hpp"
#include "gen.hpp"

using cqh::GroupData;

TEST_CASE("certificate for (2,6,5) passes and flags the table cell") {
    const auto cert = cqh::verify(GroupData::validate(2, 6, 5));
    CHECK(cert.passed());
    bool found = false;
    for (const auto& e : cert.errata)
        if (e.id == "m_table_cell_chi1_E4") {
            found = true;
            CHECK(e.computed == "4/5");
            CHECK(e.published == "1/5");
        }
    CHECK(found);
}

TEST_CASE("certificate for (2,3,5)") {
    const auto cert = cqh::verify(GroupData::validate(2, 3, 5));
    CHECK(cert.passed());
    REQUIRE(cert.find("ghilb.tangent_dimensions") != nullptr);
    CHECK(cert.find("ghilb.tangent_dimensions")->detail.rfind("9/9", 0) == 0);
    REQUIRE(cert.find("ghilb.example_graphs") != nullptr);
    CHECK(cert.find("ghilb.example_graphs")->passed);
}

TEST_CASE("certificate json lists every check") {
    const auto cert = cqh::verify(GroupData::validate(1, 2, 5));
    const auto j = cqh::to_json(cert);
    CHECK(j.at("checks").size() == cert.checks.size());
    CHECK(j.at("passed").get<bool>());
    for (const auto& e : cert.errata) {
        nlohmann::json ej = e;
        CHECK(ej.get<cqh::Erratum>() == e);
    }
}

TEST_CASE("mirror summaries agree") {
    for (const auto& g : gen::triples(5, 6)) CHECK(cqh::convention_free_summary(g) == cqh::convention_free_summary(g.mirror()));
}
