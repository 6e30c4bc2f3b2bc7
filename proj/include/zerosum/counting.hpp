#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "residue.hpp"

namespace zerosum {

/// Exact distribution of subset sums: counts[j][g] is the number of index
/// subsets of size j whose coordinatewise sum has mixed-radix code g.
///
/// counts[j][0] is the zero-sum count, i.e. the (j|X) symbol.
struct CountTable {
    Coord n = 0;
    std::size_t k = 0;
    std::size_t family_size = 0;
    std::vector<std::vector<Bigint>> counts;

    const Bigint& at(std::size_t j, std::uint64_t gcode) const {
        return counts.at(j).at(static_cast<std::size_t>(gcode));
    }
    const Bigint& zero_count(std::size_t j) const { return counts.at(j)[0]; }
};

/// Same shape with every entry reduced mod p.
struct CountTableModP {
    Coord p = 0;
    std::size_t k = 0;
    std::size_t family_size = 0;
    std::vector<std::vector<std::uint32_t>> counts;

    std::uint32_t at(std::size_t j, std::uint64_t gcode) const {
        return counts.at(j).at(static_cast<std::size_t>(gcode));
    }
    std::uint32_t zero_count(std::size_t j) const { return counts.at(j)[0]; }
};

namespace detail {

inline std::size_t checked_table_width(Coord n, std::size_t k, std::size_t rows,
                                       const char* who) {
    const auto order = group_order(n, k);
    // cap the dense table at ~half a billion cells
    if (order > 500'000'000 / (rows + 1))
        throw resource_limit_error(std::string(who) + ": table of " + std::to_string(rows + 1) +
                                   " x " + std::to_string(order) + " entries exceeds memory budget");
    return static_cast<std::size_t>(order);
}

} // namespace detail

/// Exact subset-sum distribution of X, computed by the incremental
/// recurrence T'[j][g] = T[j][g] + T[j-1][g - x] over the points x of X.
/// No modular shortcut: entries are exact integers.
inline CountTable count_exact(const PointFamily& X, std::size_t point_budget = 600) {
    if (X.size() > point_budget)
        throw resource_limit_error("count_exact: family has " + std::to_string(X.size()) +
                                   " points, budget is " + std::to_string(point_budget));
    const std::size_t G = detail::checked_table_width(X.n, X.k, X.size(), "count_exact");

    CountTable t;
    t.n = X.n;
    t.k = X.k;
    t.family_size = X.size();
    t.counts.assign(X.size() + 1, std::vector<Bigint>(G));
    t.counts[0][0] = 1;

    std::size_t seen = 0;
    for (const auto& x : X.points) {
        const auto add = add_code_table(x);
        ++seen;
        for (std::size_t j = seen; j >= 1; --j) {
            const auto& prev = t.counts[j - 1];
            auto& cur = t.counts[j];
            for (std::size_t g = 0; g < G; ++g)
                if (prev[g] != 0) cur[add[g]] += prev[g];
        }
    }

    // row-sum self-check: sum_g counts[j][g] == C(|X|, j)
    Bigint expect = 1;
    for (std::size_t j = 0; j <= X.size(); ++j) {
        Bigint row = 0;
        for (const auto& c : t.counts[j]) row += c;
        if (row != expect)
            throw std::logic_error("count_exact: row-sum self-check failed at j = " +
                                   std::to_string(j));
        expect = expect * (X.size() - j) / (j + 1);
    }
    return t;
}

/// Subset-sum distribution mod p; the same recurrence in residue arithmetic.
/// Requires the family modulus to equal p.
inline CountTableModP count_mod_p(const PointFamily& X, Coord p) {
    require_odd_prime(p, "count_mod_p");
    if (X.n != p)
        throw invalid_input_error("count_mod_p: family modulus " + std::to_string(X.n) +
                                  " does not match p = " + std::to_string(p));
    const std::size_t G = detail::checked_table_width(X.n, X.k, X.size(), "count_mod_p");
    const auto up = static_cast<std::uint32_t>(p);

    CountTableModP t;
    t.p = p;
    t.k = X.k;
    t.family_size = X.size();
    t.counts.assign(X.size() + 1, std::vector<std::uint32_t>(G, 0));
    t.counts[0][0] = 1;

    std::size_t seen = 0;
    for (const auto& x : X.points) {
        const auto add = add_code_table(x);
        ++seen;
        for (std::size_t j = seen; j >= 1; --j) {
            const auto& prev = t.counts[j - 1];
            auto& cur = t.counts[j];
            for (std::size_t g = 0; g < G; ++g) {
                const std::uint32_t v = prev[g];
                if (v != 0) {
                    auto& slot = cur[add[g]];
                    slot += v;
                    if (slot >= up) slot -= up;
                }
            }
        }
    }

    for (std::size_t j = 0; j <= X.size(); ++j) {
        std::uint64_t row = 0;
        for (std::uint32_t c : t.counts[j]) {
            row += c;
            if (row >= up) row %= up;
        }
        if (row != lucas_binomial_mod_p(X.size(), j, up))
            throw std::logic_error("count_mod_p: row-sum self-check failed at j = " +
                                   std::to_string(j));
    }
    return t;
}

/// Visit all size-j index combinations of {0, ..., m-1} in lexicographic
/// order. The callback receives the current index tuple.
template <typename F>
inline void for_each_combination(std::size_t m, std::size_t j, F&& f) {
    if (j > m) return;
    std::vector<std::size_t> idx(j);
    for (std::size_t i = 0; i < j; ++i) idx[i] = i;
    while (true) {
        f(std::span<const std::size_t>(idx));
        // advance: rightmost slot that can still move
        std::size_t i = j;
        while (i > 0 && idx[i - 1] == m - j + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t l = i; l < j; ++l) idx[l] = idx[l - 1] + 1;
    }
}

/// Independent oracle: explicit enumeration of all C(|X|, j) index subsets.
/// Only intended for test-sized inputs.
inline Bigint count_brute_force(const PointFamily& X, std::size_t j) {
    if (X.size() > 22)
        throw resource_limit_error("count_brute_force: family has " + std::to_string(X.size()) +
                                   " points, enumeration is capped at 22");
    Bigint hits = 0;
    std::vector<Coord> sum(X.k);
    for_each_combination(X.size(), j, [&](std::span<const std::size_t> idx) {
        sum.assign(X.k, 0);
        for (std::size_t i : idx)
            for (std::size_t c = 0; c < X.k; ++c) sum[c] += X.points[i].coords[c];
        for (std::size_t c = 0; c < X.k; ++c)
            if (sum[c] % X.n != 0) return;
        ++hits;
    });
    return hits;
}

/// Exact boolean form of the zero-class question: does some index subset of
/// size j sum to zero? Reachability DP over (chosen count, sum residue); no
/// counting, so no overflow concerns at any size.
inline bool has_zero_sum_subset(const PointFamily& X, std::size_t j) {
    if (j > X.size()) return false;
    const std::size_t G = detail::checked_table_width(X.n, X.k, j, "has_zero_sum_subset");
    std::vector<std::vector<char>> reach(j + 1, std::vector<char>(G, 0));
    reach[0][0] = 1;
    std::size_t seen = 0;
    for (const auto& x : X.points) {
        const auto add = add_code_table(x);
        ++seen;
        for (std::size_t jj = std::min(seen, j); jj >= 1; --jj) {
            const auto& prev = reach[jj - 1];
            auto& cur = reach[jj];
            for (std::size_t g = 0; g < G; ++g)
                if (prev[g]) cur[add[g]] = 1;
        }
        if (reach[j][0]) return true;
    }
    return false;
}

} // namespace zerosum
