#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltahall/checks.hpp"

using namespace deltahall;

TEST_CASE("suite registry") {
    CHECK(check_suite_names().size() == 12);
    Catalog cat = Catalog::enumerate(Quiver(1, {}), 2, 1);
    HallTables t(cat);
    CHECK_THROWS_AS(run_check("nope", t), config_error);
}

TEST_CASE("all suites pass on the point quiver") {
    Catalog cat = Catalog::enumerate(Quiver(1, {}), 2, 3);
    HallTables t(cat);
    for (const std::string& suite : check_suite_names()) {
        CheckReport rep = run_check(suite, t);
        INFO(suite);
        CHECK(rep.ok());
    }
}

TEST_CASE("all suites pass on the arrow quiver") {
    Catalog cat = Catalog::enumerate(Quiver(2, {{0, 1}}), 2, 3);
    HallTables t(cat, 2);
    for (const std::string& suite : check_suite_names()) {
        CheckReport rep = run_check(suite, t, std::nullopt, 2);
        INFO(suite);
        CHECK(rep.ok());
        CHECK(rep.checked > 0);
    }
}

TEST_CASE("reports are identical for any worker count") {
    Catalog cat = Catalog::enumerate(Quiver(2, {{0, 1}}), 2, 2);
    HallTables t(cat);
    for (const std::string& suite : {"green", "assoc", "parity"}) {
        CheckReport serial = run_check(suite, t, std::nullopt, 1);
        CheckReport wide = run_check(suite, t, std::nullopt, 8);
        CHECK(serial.checked == wide.checked);
        CHECK(serial.failures.size() == wide.failures.size());
    }
}

TEST_CASE("a corrupted table is caught with a counterexample") {
    Catalog cat = Catalog::enumerate(Quiver(1, {}), 2, 3);
    HallTables t(cat);
    t.override_hall_number(1, 1, 2, Integer(5));  // truth: 3

    CheckReport green = run_check("green", t);
    CHECK(!green.ok());
    CHECK(!green.failures[0].operands.empty());
    CHECK(!green.failures[0].detail.empty());

    CheckReport assoc = run_check("assoc", t);
    CHECK(!assoc.ok());
}

TEST_CASE("rank2 refuses an undersized catalog") {
    Catalog cat = Catalog::enumerate(Quiver(2, {{0, 1}}), 2, 2);
    HallTables t(cat);
    CHECK_THROWS_AS(run_check("rank2", t), config_error);
}

TEST_CASE("rank2 reports lambdas") {
    Catalog cat = Catalog::enumerate(Quiver(2, {{0, 1}}), 2, 3);
    HallTables t(cat);
    CheckReport rep = run_check("rank2", t);
    CHECK(rep.ok());
    REQUIRE(rep.rank2_pairs.size() == 2);
    for (const auto& p : rep.rank2_pairs) {
        CHECK(p.n_ij == 1);
        CHECK(p.residual_zero);
        CHECK(p.lambda.has_value());
    }
}

TEST_CASE("higher multiplicity pairs are reported, not asserted") {
    Catalog cat = Catalog::enumerate(Quiver(2, {{0, 1}, {0, 1}}), 2, 3);
    HallTables t(cat);
    CheckReport rep = run_check("rank2", t);
    CHECK(rep.ok());  // nothing asserted
    REQUIRE(rep.rank2_pairs.size() == 2);
    for (const auto& p : rep.rank2_pairs) {
        CHECK(p.n_ij == 2);
        CHECK(!p.lambda.has_value());
    }
    CHECK(!rep.notes.empty());
}
