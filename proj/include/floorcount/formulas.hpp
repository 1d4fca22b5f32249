#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "floorcount/bigint.hpp"
#include "floorcount/enumeration.hpp"

namespace floorcount {

// Exact binomial coefficient; 0 outside the triangle.
inline BigInt binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt value = 1;
    for (long long i = 1; i <= k; ++i) {
        value *= n - k + i;
        value /= i;
    }
    return value;
}

// Memoized table of the rational counts N(d,0) defined by the recursion
//   N(d) = sum over d1+d2=d of N(d1) N(d2)
//          (d1^2 d2^2 C(3d-4, 3d1-2) - d1^3 d2 C(3d-4, 3d1-1))
// with initial value N(1) = 1.
class RecursionTable {
public:
    BigInt value(int d) {
        if (d < 1) throw std::invalid_argument("kontsevich: degree must be >= 1");
        std::lock_guard<std::mutex> lock(mutex_);
        return compute(d);
    }

private:
    BigInt compute(int d) {
        if (auto it = table_.find(d); it != table_.end()) return it->second;
        BigInt total = 0;
        for (int d1 = 1; d1 < d; ++d1) {
            const int d2 = d - d1;
            const BigInt left = BigInt(d1) * d1 * d2 * d2 *
                                binomial(3LL * d - 4, 3LL * d1 - 2);
            const BigInt right = BigInt(d1) * d1 * d1 * d2 *
                                 binomial(3LL * d - 4, 3LL * d1 - 1);
            total += compute(d1) * compute(d2) * (left - right);
        }
        table_.emplace(d, total);
        return total;
    }

    std::mutex mutex_;
    std::map<int, BigInt> table_{{1, BigInt(1)}};
};

inline BigInt kontsevich(int d) {
    static RecursionTable table;
    return table.value(d);
}

inline int genus_max(int d) {
    if (d < 1) throw std::invalid_argument("genus_max: degree must be >= 1");
    return (d - 1) * (d - 2) / 2;
}

inline int genus_from_nodes(int d, int nodes) {
    const int top = genus_max(d);
    if (nodes < 0 || nodes > top)
        throw std::out_of_range("genus_from_nodes: node count outside [0, (d-1)(d-2)/2]");
    return top - nodes;
}

inline int nodes_from_genus(int d, int genus) {
    const int top = genus_max(d);
    if (genus < 0 || genus > top)
        throw std::out_of_range("nodes_from_genus: genus outside [0, (d-1)(d-2)/2]");
    return top - genus;
}

// Number of generic point conditions that pin down a degree-d curve.
inline int space_dimension(int d) {
    if (d < 1) throw std::invalid_argument("space_dimension: degree must be >= 1");
    return d * (d + 3) / 2;
}

inline int severi_dimension(int d, int genus) {
    if (d < 1 || genus < 0)
        throw std::invalid_argument("severi_dimension: bad parameters");
    return 3 * d - 1 + genus;
}

// Closed-form count N(d, genus_max - delta) for delta up to two nodes
// below the nonsingular case.
inline BigInt closed_count(int d, int delta) {
    switch (delta) {
        case 0:
            if (d < 1) throw std::out_of_range("closed_count: d must be >= 1");
            return 1;
        case 1:
            if (d < 3) throw std::out_of_range("closed_count: delta 1 needs d >= 3");
            return BigInt(3) * (d - 1) * (d - 1);
        case 2: {
            if (d < 4) throw std::out_of_range("closed_count: delta 2 needs d >= 4");
            const BigRat value = BigRat(3, 2) * (d - 1) * (d - 2) *
                                 (3LL * d * d - 3LL * d - 11);
            if (boost::multiprecision::denominator(value) != 1)
                throw std::logic_error("closed_count: formula did not clear 3/2");
            return boost::multiprecision::numerator(value);
        }
        default:
            throw std::out_of_range("closed_count: delta must be 0, 1 or 2");
    }
}

struct CongruenceCheck {
    bool congruent = false;
    int complex_mod4 = 0;
    int real_mod4 = 0;
};

inline CongruenceCheck congruence_mod4(const BigInt& complex_count,
                                       const BigInt& real_count) {
    CongruenceCheck check;
    check.complex_mod4 = (complex_count % 4).convert_to<int>();
    check.real_mod4 = (real_count % 4).convert_to<int>();
    check.congruent = check.complex_mod4 == check.real_mod4;
    return check;
}

inline CongruenceCheck congruence_mod4(int d, int threads = 1) {
    const CountTotals totals = aggregate_counts(d, 0, threads);
    return congruence_mod4(totals.complex_total, totals.real_total);
}

// Diagnostic ratio ln N(d,0) / (3 d ln d); approaches 1 very slowly.
inline double asymptotic_ratio(int d) {
    if (d < 2) throw std::invalid_argument("asymptotic_ratio: d must be >= 2");
    return log_big(kontsevich(d)) / (3.0 * d * std::log(static_cast<double>(d)));
}

}  // namespace floorcount
