#pragma once

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "floorcount/enumeration.hpp"
#include "floorcount/formulas.hpp"

namespace floorcount {

// Reference values for low degrees (see README for sources).
// complex_reference_table[d][g] = N(d, g) for d <= 4.
inline const std::map<int, std::vector<BigInt>>& complex_reference_table() {
    static const std::map<int, std::vector<BigInt>> table = {
        {1, {BigInt(1)}},
        {2, {BigInt(1)}},
        {3, {BigInt(12), BigInt(1)}},
        {4, {BigInt(620), BigInt(225), BigInt(27), BigInt(1)}},
    };
    return table;
}

// rational_reference_table[d] = N(d, 0) for d <= 7.
inline const std::map<int, BigInt>& rational_reference_table() {
    static const std::map<int, BigInt> table = {
        {1, BigInt(1)},          {2, BigInt(1)},
        {3, BigInt(12)},         {4, BigInt(620)},
        {5, BigInt(87304)},      {6, BigInt(26312976)},
        {7, BigInt("14616808192")},
    };
    return table;
}

// real_reference_table[d] = W(d) for d <= 7.
inline const std::map<int, BigInt>& real_reference_table() {
    static const std::map<int, BigInt> table = {
        {1, BigInt(1)},       {2, BigInt(1)},
        {3, BigInt(8)},       {4, BigInt(240)},
        {5, BigInt(18264)},   {6, BigInt(2845440)},
        {7, BigInt("792731520")},
    };
    return table;
}

struct VerifyCheck {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
    double seconds = 0.0;
};

struct VerifySuiteResult {
    std::vector<VerifyCheck> checks;

    bool all_pass() const {
        for (const VerifyCheck& check : checks)
            if (!check.pass) return false;
        return true;
    }
};

// Runs the cross-check suite up to the requested degree: enumeration
// against the reference tables and the recursion, closed formulas,
// congruence and monotonicity, marking counts of the degree-3 diagrams,
// and the doubling-family recursion. Never consults the result cache.
inline VerifySuiteResult run_verify_suite(int max_degree, int threads = 1) {
    if (max_degree < 1)
        throw std::invalid_argument("verify: max degree must be >= 1");

    VerifySuiteResult result;
    std::map<std::pair<int, int>, CountTotals> totals;
    auto aggregate = [&](int d, int g) -> const CountTotals& {
        auto it = totals.find({d, g});
        if (it == totals.end())
            it = totals.emplace(std::pair{d, g}, aggregate_counts(d, g, threads)).first;
        return it->second;
    };

    auto timed = [&](const std::string& name, const std::string& expected,
                     const std::function<std::string()>& compute,
                     const std::function<bool(const std::string&)>& accept) {
        VerifyCheck check;
        check.name = name;
        check.expected = expected;
        const auto start = std::chrono::steady_clock::now();
        try {
            check.computed = compute();
            check.pass = accept(check.computed);
        } catch (const std::exception& error) {
            check.computed = std::string("error: ") + error.what();
            check.pass = false;
        }
        check.seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        result.checks.push_back(std::move(check));
    };
    auto expect_value = [&](const std::string& name, const BigInt& expected,
                            const std::string& provenance,
                            const std::function<BigInt()>& compute) {
        timed(
            name, expected.str() + " (" + provenance + ")",
            [compute] { return compute().str(); },
            [expected](const std::string& got) { return got == expected.str(); });
    };

    // Kontsevich recursion against the reference table.
    for (int d = 1; d <= std::min(max_degree, 7); ++d)
        expect_value("kontsevich(" + std::to_string(d) + ")",
                     rational_reference_table().at(d), "reference table",
                     [d] { return kontsevich(d); });

    // Enumeration equals the recursion in genus 0.
    for (int d = 1; d <= max_degree; ++d)
        expect_value("N(" + std::to_string(d) + ",0) by diagrams",
                     kontsevich(d), "Kontsevich recursion",
                     [&, d] { return aggregate(d, 0).complex_total; });

    // Low-degree table, including the zeros above the genus bound.
    for (int d = 1; d <= std::min(max_degree, 4); ++d) {
        const auto& row = complex_reference_table().at(d);
        for (int g = 0; g <= genus_max(d) + 1; ++g) {
            const BigInt expected = g < static_cast<int>(row.size()) ? row[g] : BigInt(0);
            expect_value("N(" + std::to_string(d) + "," + std::to_string(g) + ")",
                         expected, "reference table",
                         [&, d, g] { return aggregate(d, g).complex_total; });
        }
    }

    // Welschinger counts.
    for (int d = 1; d <= std::min(max_degree, 7); ++d)
        expect_value("W(" + std::to_string(d) + ")", real_reference_table().at(d),
                     "reference table",
                     [&, d] { return aggregate(d, 0).real_total; });

    // Top genus admits exactly one diagram with one marking.
    for (int d = 1; d <= max_degree; ++d)
        expect_value("N(" + std::to_string(d) + "," + std::to_string(genus_max(d)) + ")",
                     1, "nonsingular count",
                     [&, d] { return aggregate(d, genus_max(d)).complex_total; });

    // Closed formulas one and two nodes below the top genus.
    for (int d = 3; d <= max_degree; ++d)
        expect_value("N(" + std::to_string(d) + "," + std::to_string(genus_max(d) - 1) + ")",
                     closed_count(d, 1), "one-node formula",
                     [&, d] { return aggregate(d, genus_max(d) - 1).complex_total; });
    for (int d = 4; d <= std::min(max_degree, 5); ++d)
        expect_value("N(" + std::to_string(d) + "," + std::to_string(genus_max(d) - 2) + ")",
                     closed_count(d, 2), "two-node formula",
                     [&, d] { return aggregate(d, genus_max(d) - 2).complex_total; });

    // W(d) = N(d,0) mod 4, and the bounds 0 < W(d) <= N(d,0).
    for (int d = 1; d <= max_degree; ++d) {
        timed(
            "W(" + std::to_string(d) + ") mod 4", "congruent (mod-4 congruence)",
            [&, d] {
                const CountTotals& t = aggregate(d, 0);
                const CongruenceCheck check =
                    congruence_mod4(t.complex_total, t.real_total);
                return std::string(check.congruent ? "congruent" : "different") + " (" +
                       std::to_string(check.complex_mod4) + " vs " +
                       std::to_string(check.real_mod4) + ")";
            },
            [](const std::string& got) { return got.starts_with("congruent"); });
        timed(
            "0 < W(" + std::to_string(d) + ") <= N(" + std::to_string(d) + ",0)",
            "within bounds (signed count bound)",
            [&, d] {
                const CountTotals& t = aggregate(d, 0);
                const bool ok = t.real_total > 0 && t.real_total <= t.complex_total;
                return std::string(ok ? "within bounds" : "out of bounds");
            },
            [](const std::string& got) { return got == "within bounds"; });
    }

    if (max_degree >= 2)
        timed(
            "W monotone", "increasing, strictly from degree 2 (monotonicity)",
            [&] {
                bool ok = true;
                for (int d = 2; d <= max_degree; ++d) {
                    const BigInt& prev = aggregate(d - 1, 0).real_total;
                    const BigInt& next = aggregate(d, 0).real_total;
                    if (next < prev) ok = false;
                    if (d >= 3 && next <= prev) ok = false;
                }
                return std::string(ok ? "monotone" : "not monotone");
            },
            [](const std::string& got) { return got == "monotone"; });

    if (max_degree >= 3)
        timed(
            "degree-3 marking counts", "markings {1,5,3}, mu {4,1,1} (reference)",
            [&] {
                std::multiset<std::string> markings, mus;
                for (const DiagramClass& entry : enumerate_diagram_classes(3, 0, threads)) {
                    markings.insert(entry.markings.str());
                    mus.insert(entry.mu_complex.str());
                }
                std::string got = "markings {";
                for (const auto& m : markings) got += m + ",";
                got += "}, mu {";
                for (const auto& m : mus) got += m + ",";
                got += "}";
                return got;
            },
            [](const std::string& got) {
                return got == "markings {1,3,5,}, mu {1,1,4,}";
            });

    for (int k = 2; k <= 4; ++k)
        timed(
            "doubling recursion k=" + std::to_string(k), "both routes equal (marking recursion)",
            [k] {
                const DoublingCheck check = check_doubling_recursion(k);
                return (check.equal ? std::string("equal: ") : std::string("differ: ")) +
                       check.direct.str() + " vs " + check.predicted.str();
            },
            [](const std::string& got) { return got.starts_with("equal"); });

    return result;
}

inline void print_verify_table(const VerifySuiteResult& result, std::ostream& out) {
    std::size_t name_width = 4, expected_width = 8, computed_width = 8;
    for (const VerifyCheck& check : result.checks) {
        name_width = std::max(name_width, check.name.size());
        expected_width = std::max(expected_width, check.expected.size());
        computed_width = std::max(computed_width, check.computed.size());
    }
    out << std::left << std::setw(static_cast<int>(name_width)) << "name" << "  "
        << std::setw(static_cast<int>(expected_width)) << "expected" << "  "
        << std::setw(static_cast<int>(computed_width)) << "computed" << "  "
        << std::setw(6) << "status" << "  " << "time\n";
    for (const VerifyCheck& check : result.checks) {
        std::ostringstream time;
        time << std::fixed << std::setprecision(3) << check.seconds << "s";
        out << std::left << std::setw(static_cast<int>(name_width)) << check.name
            << "  " << std::setw(static_cast<int>(expected_width)) << check.expected
            << "  " << std::setw(static_cast<int>(computed_width)) << check.computed
            << "  " << std::setw(6) << (check.pass ? "pass" : "FAIL") << "  "
            << time.str() << "\n";
    }
    out << (result.all_pass() ? "all checks passed\n" : "some checks FAILED\n");
}

}  // namespace floorcount
