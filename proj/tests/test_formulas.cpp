#include <catch2/catch_amalgamated.hpp>

#include "floorcount/formulas.hpp"

using namespace floorcount;

TEST_CASE("binomial basics and Pascal rule", "[formulas]") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(7, -1) == 0);
    CHECK(binomial(7, 8) == 0);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);

    for (long long n = 0; n <= 64; ++n)
        for (long long k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n, n - k));
            if (n > 0)
                CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
}

TEST_CASE("rational-count recursion reproduces the reference values", "[formulas]") {
    CHECK(kontsevich(1) == 1);
    CHECK(kontsevich(2) == 1);
    CHECK(kontsevich(3) == 12);
    CHECK(kontsevich(4) == 620);
    CHECK(kontsevich(5) == 87304);
    CHECK(kontsevich(6) == 26312976);
    CHECK(kontsevich(7) == BigInt("14616808192"));
    CHECK_THROWS_AS(kontsevich(0), std::invalid_argument);
}

TEST_CASE("divisibility observations on the recursion values", "[formulas]") {
    for (int d = 3; d <= 10; ++d)
        CHECK(kontsevich(d) % 2 == 0);
    for (int d = 1; d <= 10; ++d) {
        const BigInt power = BigInt(1) << ((d - 1) / 2);
        CHECK(kontsevich(d) % power == 0);
    }
}

TEST_CASE("closed formulas", "[formulas]") {
    CHECK(closed_count(3, 0) == 1);
    CHECK(closed_count(3, 1) == 12);
    CHECK(closed_count(4, 1) == 27);
    CHECK(closed_count(4, 2) == 225);
    CHECK(closed_count(5, 2) == 882);
    CHECK(closed_count(6, 2) == 2370);

    CHECK_THROWS_AS(closed_count(2, 1), std::out_of_range);
    CHECK_THROWS_AS(closed_count(3, 2), std::out_of_range);
    CHECK_THROWS_AS(closed_count(4, 3), std::out_of_range);

    // The 3/2 factor clears for every degree.
    for (int d = 4; d <= 40; ++d)
        CHECK_NOTHROW(closed_count(d, 2));
}

TEST_CASE("genus and dimension helpers", "[formulas]") {
    CHECK(genus_max(1) == 0);
    CHECK(genus_max(4) == 3);
    CHECK(genus_from_nodes(3, 1) == 0);
    CHECK(nodes_from_genus(4, 0) == 3);
    CHECK_THROWS_AS(genus_from_nodes(3, 2), std::out_of_range);
    CHECK_THROWS_AS(nodes_from_genus(3, 4), std::out_of_range);

    CHECK(space_dimension(1) == 2);
    CHECK(space_dimension(2) == 5);
    CHECK(space_dimension(3) == 9);
    CHECK(severi_dimension(3, 0) == 8);
    CHECK(severi_dimension(1, 0) == 2);

    // One fewer condition than the dimension of the curve space.
    for (int d = 1; d <= 12; ++d)
        CHECK(space_dimension(d) == (d + 2) * (d + 1) / 2 - 1);
}

TEST_CASE("mod-4 congruence", "[formulas]") {
    const CongruenceCheck trivial = congruence_mod4(BigInt(1), BigInt(1));
    CHECK(trivial.congruent);
    CHECK(trivial.complex_mod4 == 1);

    const CongruenceCheck cubic = congruence_mod4(BigInt(12), BigInt(8));
    CHECK(cubic.congruent);
    CHECK(cubic.complex_mod4 == 0);

    const CongruenceCheck quartic = congruence_mod4(BigInt(620), BigInt(240));
    CHECK(quartic.congruent);

    CHECK_FALSE(congruence_mod4(BigInt(5), BigInt(7)).congruent);

    // Computed from the enumeration for a small degree.
    CHECK(congruence_mod4(3).congruent);
}

TEST_CASE("asymptotic ratio diagnostic", "[formulas]") {
    CHECK(asymptotic_ratio(2) == 0.0);
    CHECK(asymptotic_ratio(7) == Catch::Approx(0.5727).margin(0.001));
    for (int d = 3; d <= 7; ++d)
        CHECK(asymptotic_ratio(d) > asymptotic_ratio(d - 1));
    CHECK_THROWS_AS(asymptotic_ratio(1), std::invalid_argument);
}
