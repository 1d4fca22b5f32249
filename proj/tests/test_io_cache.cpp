#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include "curve_fixtures.hpp"
#include "diagram_fixtures.hpp"
#include "floorcount/cache.hpp"
#include "floorcount/enumeration.hpp"
#include "floorcount/json_io.hpp"

using namespace floorcount;

TEST_CASE("diagram JSON round trip", "[io]") {
    for (const FloorDiagram& original :
         {fixtures::degree2(), fixtures::cubic_weight2(), fixtures::cubic_genus1()}) {
        const Json encoded = diagram_to_json(original);
        const FloorDiagram decoded = diagram_from_json(encoded);
        CHECK(validate(decoded).valid());
        CHECK(canonical_key(decoded) == canonical_key(original));
        CHECK(diagram_to_json(decoded) == encoded);
    }
}

TEST_CASE("enumerated diagrams reparse to the same canonical key", "[io]") {
    for (const DiagramClass& entry : enumerate_diagram_classes(4, 1)) {
        const FloorDiagram decoded = diagram_from_json(diagram_to_json(entry.diagram));
        CHECK(validate(decoded).valid());
        CHECK(canonical_key(decoded) == entry.key);
    }
}

TEST_CASE("diagram JSON rejects malformed input", "[io]") {
    const Json good = diagram_to_json(fixtures::degree2());

    Json unknown = good;
    unknown["extra"] = 1;
    CHECK_THROWS_WITH(diagram_from_json(unknown),
                      Catch::Matchers::ContainsSubstring("unknown field"));

    Json vertex_extra = good;
    vertex_extra["vertices"][0]["color"] = "red";
    CHECK_THROWS_AS(diagram_from_json(vertex_extra), std::invalid_argument);

    Json missing = good;
    missing.erase("genus");
    CHECK_THROWS_WITH(diagram_from_json(missing),
                      Catch::Matchers::ContainsSubstring("genus"));

    Json bad_ref = good;
    bad_ref["edges"][0]["source"] = "nope";
    CHECK_THROWS_AS(diagram_from_json(bad_ref), std::invalid_argument);

    Json bad_type = good;
    bad_type["degree"] = "two";
    CHECK_THROWS_AS(diagram_from_json(bad_type), std::invalid_argument);
}

TEST_CASE("dot export labels heavy edges only", "[io]") {
    const std::string dot = diagram_to_dot(fixtures::cubic_weight2());
    CHECK(dot.find("label=\"2\"") != std::string::npos);
    CHECK(dot.find("label=\"1\"") == std::string::npos);
    CHECK(dot.find("rankdir=BT") != std::string::npos);

    // All weights are 1, so no edge carries a weight label.
    const std::string plain = diagram_to_dot(fixtures::cubic_path());
    CHECK(plain.find("label=\"1\"") == std::string::npos);
    CHECK(plain.find("label=\"2\"") == std::string::npos);
}

TEST_CASE("rational parsing", "[io]") {
    CHECK(rational_from_string("3") == Rat(3));
    CHECK(rational_from_string("-7/2") == Rat(-7, 2));
    CHECK(rational_to_string(Rat(-7, 2)) == "-7/2");
    CHECK(rational_to_string(Rat(4)) == "4");
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("2/-3"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("2/4"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
}

TEST_CASE("curve JSON round trip", "[io]") {
    const TropicalCurve original = fixtures::weight2_cubic();
    const Json encoded = curve_to_json(original);
    const TropicalCurve decoded = curve_from_json(encoded);
    CHECK(check_balancing(decoded).valid());
    CHECK(degree(decoded) == 3);
    CHECK(curve_to_json(decoded) == encoded);

    Json bad = encoded;
    bad["edges"][0]["kind"] = "diagonal";
    CHECK_THROWS_AS(curve_from_json(bad), std::invalid_argument);
}

TEST_CASE("result cache round trip and corruption handling", "[cache]") {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() /
        ("floorcount_cache_test_" +
         std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    std::filesystem::remove_all(dir);
    ResultCache cache(dir);
    REQUIRE(cache.enabled());

    const CacheKey key{5, 0, "complex", "diagrams"};
    CHECK_FALSE(cache.load(key).has_value());

    cache.store(key, BigInt(87304));
    const auto loaded = cache.load(key);
    REQUIRE(loaded.has_value());
    CHECK(*loaded == 87304);

    // A different key misses.
    CHECK_FALSE(cache.load({5, 1, "complex", "diagrams"}).has_value());

    // Corrupt the entry: the loader warns and recomputes.
    {
        std::ofstream out(dir / "count_complex_d5_g0_diagrams.json");
        out << "{ not json";
    }
    CHECK_FALSE(cache.load(key).has_value());

    // Key mismatch inside the file is also treated as corruption.
    cache.store(key, BigInt(87304));
    {
        std::ifstream in(dir / "count_complex_d5_g0_diagrams.json");
        Json content = Json::parse(in);
        in.close();
        content["key"]["degree"] = 6;
        std::ofstream out(dir / "count_complex_d5_g0_diagrams.json");
        out << content.dump();
    }
    CHECK_FALSE(cache.load(key).has_value());

    std::filesystem::remove_all(dir);
}
