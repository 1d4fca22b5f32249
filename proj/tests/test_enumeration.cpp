#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "diagram_fixtures.hpp"
#include "floorcount/enumeration.hpp"

using namespace floorcount;

TEST_CASE("diagram counts for small degrees", "[enumeration]") {
    CHECK(enumerate_diagrams(1, 0).size() == 1);
    CHECK(enumerate_diagrams(2, 0).size() == 1);
    CHECK(enumerate_diagrams(3, 0).size() == 3);
    CHECK(enumerate_diagrams(3, 1).size() == 1);
    CHECK(enumerate_diagrams(2, 1).empty());
    CHECK(enumerate_diagrams(2, 5).empty());
    CHECK(enumerate_diagrams(4, 4).empty());
}

TEST_CASE("enumerated diagrams are valid and pairwise distinct", "[enumeration]") {
    for (int d = 1; d <= 4; ++d)
        for (int g = 0; g <= (d - 1) * (d - 2) / 2; ++g) {
            const auto classes = enumerate_diagram_classes(d, g);
            std::set<std::string> keys;
            for (const DiagramClass& entry : classes) {
                CHECK(validate(entry.diagram).valid());
                CHECK(keys.insert(entry.key).second);
                CHECK(entry.key == canonical_key(entry.diagram));
            }
        }
}

TEST_CASE("the three rational cubic diagrams", "[enumeration]") {
    const auto classes = enumerate_diagram_classes(3, 0);
    REQUIRE(classes.size() == 3);
    std::multiset<std::string> markings, mus;
    for (const DiagramClass& entry : classes) {
        markings.insert(entry.markings.str());
        mus.insert(entry.mu_complex.str());
    }
    CHECK(markings == std::multiset<std::string>{"1", "3", "5"});
    CHECK(mus == std::multiset<std::string>{"1", "1", "4"});

    bool found_weight2 = false;
    for (const DiagramClass& entry : classes)
        if (isomorphic(entry.diagram, fixtures::cubic_weight2())) {
            found_weight2 = true;
            CHECK(entry.markings == 1);
            CHECK(entry.mu_real == 0);
        }
    CHECK(found_weight2);
}

TEST_CASE("solve_weights on forced trees", "[enumeration]") {
    // Path with all unbounded edges at the bottom: weights 2 then 1.
    DiagramSkeleton path{3, 0, {{0, 1}, {1, 2}}, {3, 0, 0}};
    const auto solutions = solve_weights(path);
    REQUIRE(solutions.size() == 1);
    CHECK(solutions[0] == std::vector<int>{2, 1});

    // Two edges into the same sink: divergence at the sink is at least 2.
    DiagramSkeleton merge{3, 0, {{0, 2}, {1, 2}}, {3, 0, 0}};
    CHECK(solve_weights(merge).empty());

    DiagramSkeleton simple{2, 0, {{0, 1}}, {2, 0}};
    const auto unique = solve_weights(simple);
    REQUIRE(unique.size() == 1);
    CHECK(unique[0] == std::vector<int>{1});

    CHECK_THROWS_AS(solve_weights(DiagramSkeleton{2, 0, {{1, 0}}, {2, 0}}),
                    std::invalid_argument);
}

TEST_CASE("genus-0 skeletons admit at most one weight assignment", "[enumeration]") {
    // Random ordered trees with random unbounded counts.
    std::mt19937 rng(991);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> size_dist(2, 7);
        const int d = size_dist(rng);
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < d; ++v) {
            std::uniform_int_distribution<int> parent(0, v - 1);
            edges.emplace_back(parent(rng), v);
        }
        std::vector<int> unbounded(d, 0);
        int rest = d;
        for (int v = 0; v < d && rest > 0; ++v) {
            std::uniform_int_distribution<int> part(0, rest);
            unbounded[v] = part(rng);
            rest -= unbounded[v];
        }
        unbounded[d - 1] += rest;
        const DiagramSkeleton skeleton{d, 0, edges, unbounded};
        CHECK(solve_weights(skeleton).size() <= 1);
    }
}

TEST_CASE("aggregate counts for small parameters", "[enumeration]") {
    CHECK(count_complex(1, 0).value == 1);
    CHECK(count_complex(2, 0).value == 1);
    CHECK(count_complex(3, 0).value == 12);
    CHECK(count_complex(3, 1).value == 1);
    CHECK(count_complex(2, 1).value == 0);
    CHECK(count_complex(4, 0).value == 620);
    CHECK(count_complex(4, 1).value == 225);
    CHECK(count_complex(4, 2).value == 27);
    CHECK(count_complex(4, 3).value == 1);

    CHECK(count_real_rational(1).value == 1);
    CHECK(count_real_rational(2).value == 1);
    CHECK(count_real_rational(3).value == 8);
    CHECK(count_real_rational(4).value == 240);
}

TEST_CASE("threaded enumeration matches single-threaded", "[enumeration]") {
    const auto single = enumerate_diagram_classes(4, 1, 1);
    const auto threaded = enumerate_diagram_classes(4, 1, 3);
    REQUIRE(single.size() == threaded.size());
    for (std::size_t i = 0; i < single.size(); ++i) {
        CHECK(single[i].key == threaded[i].key);
        CHECK(single[i].markings == threaded[i].markings);
    }
    CHECK(count_complex(4, 0, 3).value == 620);
}

TEST_CASE("automorphisms divide linear extensions on enumerated diagrams",
          "[enumeration]") {
    for (int d = 1; d <= 4; ++d)
        for (int g = 0; g <= (d - 1) * (d - 2) / 2; ++g)
            for (const DiagramClass& entry : enumerate_diagram_classes(d, g))
                CHECK(entry.linear_extensions % entry.automorphisms == 0);
}

TEST_CASE("doubling diagram family", "[enumeration]") {
    const FloorDiagram d1 = build_doubling_diagram(1);
    CHECK(isomorphic(d1, fixtures::degree1()));

    const FloorDiagram d2 = build_doubling_diagram(2);
    CHECK(isomorphic(d2, fixtures::degree2()));

    const FloorDiagram d3 = build_doubling_diagram(3);
    CHECK(d3.degree == 4);
    CHECK(d3.genus == 0);
    CHECK(validate(d3).valid());
    CHECK(complex_multiplicity(d3) == 1);
    CHECK(element_poset(d3).count_linear_extensions() == 280);
    CHECK(automorphism_order(d3) == 8);
    CHECK(count_markings(d3) == 35);

    CHECK_THROWS_AS(build_doubling_diagram(0), std::invalid_argument);
}

TEST_CASE("doubling marking recursion", "[enumeration]") {
    const DoublingCheck k2 = check_doubling_recursion(2);
    CHECK(k2.equal);
    CHECK(k2.direct == 1);
    CHECK(k2.predicted == 1);

    const DoublingCheck k3 = check_doubling_recursion(3);
    CHECK(k3.equal);
    CHECK(k3.direct == 35);
    CHECK(k3.predicted == 35);

    const DoublingCheck k4 = check_doubling_recursion(4);
    CHECK(k4.equal);

    CHECK_THROWS_AS(check_doubling_recursion(1), std::invalid_argument);
    CHECK_THROWS_AS(check_doubling_recursion(5), std::invalid_argument);
}
