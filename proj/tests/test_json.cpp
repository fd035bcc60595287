#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "deltahall/json_io.hpp"

using namespace deltahall;
using nlohmann::json;

TEST_CASE("coefficient encoding") {
    QuadNumber x(2, Rational(-3, 6), Rational(5, 1));
    std::string text = quad_to_json(x);
    json j = json::parse(text);
    CHECK(j["a"] == "-1/2");
    CHECK(j["b"] == "5/1");
    CHECK(quad_from_json(text, 2) == x);
    CHECK_THROWS_AS(quad_from_json("{\"a\": 1}", 2), config_error);
    CHECK_THROWS_AS(quad_from_json("{\"a\": \"1/1\", \"b\": \"x\"}", 2),
                    config_error);
}

TEST_CASE("quiver loading") {
    Quiver q = quiver_from_json("{\"vertices\": 2, \"arrows\": [[0, 1]]}");
    CHECK(q.vertex_count() == 2);
    REQUIRE(q.arrows().size() == 1);
    CHECK(q.arrows()[0].source == 0);
    CHECK(q.arrows()[0].target == 1);

    CHECK(quiver_from_json("{\"vertices\": 3}").arrows().empty());
    CHECK_THROWS_AS(quiver_from_json("{\"vertices\": 2, \"arrows\": [[0, 0]]}"),
                    config_error);
    CHECK_THROWS_AS(quiver_from_json("{\"arrows\": []}"), config_error);
    CHECK_THROWS_AS(quiver_from_json("not json"), config_error);
    CHECK_THROWS_AS(load_quiver_file("/nonexistent/q.json"), config_error);
}

TEST_CASE("twist loading") {
    TwistForm t = twist_from_json("{\"T\": [[1, -2], [0, 3]]}", 2);
    CHECK(t.exponent(K0Class({1, 0}), K0Class({0, 1})) == -2);
    CHECK(t.exponent(K0Class({1, 1}), K0Class({1, 1})) == 2);
    CHECK_THROWS_AS(twist_from_json("{\"T\": [[1]]}", 2), config_error);
    CHECK_THROWS_AS(twist_from_json("{}", 2), config_error);
}

TEST_CASE("catalog export") {
    Catalog cat = Catalog::enumerate(Quiver(2, {{0, 1}}), 2, 2);
    json j = json::parse(catalog_to_json(cat));
    CHECK(j["class_count"] == 7);
    CHECK(j["q"] == 2);
    CHECK(j["classes"].size() == 7);
    CHECK(j["classes"][0]["dim"] == json::array({0, 0}));
    // ids are positional and ascending
    for (int i = 0; i < 7; ++i) CHECK(j["classes"][i]["id"] == i);
}

TEST_CASE("table export") {
    Catalog cat = Catalog::enumerate(Quiver(1, {}), 2, 2);
    HallTables t(cat);

    json delta = json::parse(table_to_json(TableKind::delta, t));
    bool found = false;
    for (const auto& row : delta["entries"]) {
        if (row["a"] == 1 && row["b"] == 1 && row["m"] == 2) {
            CHECK(row["coeff"]["a"] == "0/1");
            CHECK(row["coeff"]["b"] == "1/4");
            found = true;
        }
    }
    CHECK(found);

    json ext = json::parse(table_to_json(TableKind::ext, t));
    for (const auto& row : ext["entries"]) {
        REQUIRE(row.contains("kshift"));
        if (row["a"] == 1 && row["b"] == 1 && row["m"] == 0)
            CHECK(row["kshift"] == json::array({2}));
    }

    // byte-identical output whatever the worker count
    for (TableKind kind : {TableKind::hall, TableKind::delta,
                           TableKind::derived, TableKind::ext,
                           TableKind::twisted}) {
        CHECK(table_to_json(kind, t, std::nullopt, 1) ==
              table_to_json(kind, t, std::nullopt, 8));
    }
}

TEST_CASE("hall table entry on the arrow quiver") {
    Catalog cat = Catalog::enumerate(Quiver(2, {{0, 1}}), 2, 2);
    HallTables t(cat);
    int s1 = -1, s2 = -1, p1 = -1;
    for (int id = 0; id < cat.size(); ++id) {
        if (cat.dim(id) == DimVector({1, 0})) s1 = id;
        if (cat.dim(id) == DimVector({0, 1})) s2 = id;
        if (cat.dim(id) == DimVector({1, 1}) && cat.rep(id).maps[0].rank() == 1)
            p1 = id;
    }
    json hall = json::parse(table_to_json(TableKind::hall, t));
    bool found = false;
    for (const auto& row : hall["entries"])
        if (row["a"] == s1 && row["b"] == s2 && row["m"] == p1) {
            CHECK(row["coeff"]["a"] == "1/1");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("report export") {
    Catalog cat = Catalog::enumerate(Quiver(2, {{0, 1}}), 2, 3);
    HallTables t(cat);
    CheckReport rep = run_check("rank2", t);
    json j = json::parse(report_to_json(rep, t));
    CHECK(j["suite"] == "rank2");
    CHECK(j["ok"] == true);
    REQUIRE(j["pairs"].size() == 2);
    CHECK(j["pairs"][0]["n_ij"] == 1);
    CHECK(j["pairs"][0]["residual_zero"] == true);
    CHECK(j["pairs"][0]["lambda"].contains("a"));
}
