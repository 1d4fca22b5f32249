#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "floorcount/bigint.hpp"

namespace floorcount {

// Strict partial order on at most 64 elements, stored transitively
// closed as one successor bitmask per element.
class Poset {
public:
    static constexpr int max_elements = 64;

    Poset(int n, const std::vector<std::pair<int, int>>& less_pairs)
        : n_(n), above_(static_cast<std::size_t>(n), 0) {
        if (n < 0 || n > max_elements)
            throw std::invalid_argument("Poset: element count out of range");
        for (auto [a, b] : less_pairs) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw std::invalid_argument("Poset: element out of range");
            if (a == b)
                throw std::invalid_argument("Poset: relation is not irreflexive");
            above_[a] |= bit(b);
        }
        for (int k = 0; k < n_; ++k)
            for (int i = 0; i < n_; ++i)
                if (above_[i] & bit(k)) above_[i] |= above_[k];
        for (int i = 0; i < n_; ++i)
            if (above_[i] & bit(i))
                throw std::invalid_argument("Poset: relation contains a cycle");
    }

    int size() const { return n_; }
    bool less(int a, int b) const { return (above_[a] & bit(b)) != 0; }
    std::uint64_t above(int a) const { return above_[a]; }

    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

    // Number of order-preserving bijections onto {1,...,n}, by dynamic
    // programming over order ideals: the last element of an ideal must
    // be maximal in it.
    BigInt count_linear_extensions() const {
        if (n_ == 0) return 1;
        const std::uint64_t full =
            (n_ == 64) ? ~std::uint64_t{0} : (bit(n_) - 1);
        std::unordered_map<std::uint64_t, BigInt> memo;
        memo.reserve(256);
        auto rec = [&](auto&& self, std::uint64_t ideal) -> BigInt {
            if (ideal == 0) return 1;
            if (auto it = memo.find(ideal); it != memo.end()) return it->second;
            BigInt total = 0;
            for (std::uint64_t rest = ideal; rest;) {
                const int e = std::countr_zero(rest);
                rest &= rest - 1;
                if ((above_[e] & ideal) == 0)
                    total += self(self, ideal ^ bit(e));
            }
            memo.emplace(ideal, total);
            return total;
        };
        return rec(rec, full);
    }

private:
    static std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

    int n_;
    std::vector<std::uint64_t> above_;
};

inline BigInt count_linear_extensions(const Poset& p) {
    return p.count_linear_extensions();
}

}  // namespace floorcount
