#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "counting.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "residue.hpp"

namespace zerosum {

/// The lower-bound configuration: each of the four unit-square vertices
/// (0,0), (0,1), (1,0), (1,1) taken n-1 times, as residues mod n. Its
/// 4(n-1) points contain no zero-sum n-subset, so f(n,2) > 4n-4.
inline PointFamily extremal_config(Coord n) {
    PointFamily X = make_family(n, 2);
    const Coord vertices[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (const auto& v : vertices)
        for (Coord rep = 0; rep < n - 1; ++rep) append_raw(X, std::span<const Coord>(v, 2));
    return X;
}

/// True iff no n-subset of X sums to zero (boolean reachability DP).
inline bool verify_no_zero_sum(const PointFamily& X, Coord n) {
    if (X.n != n)
        throw invalid_input_error("verify_no_zero_sum: family modulus " + std::to_string(X.n) +
                                  " does not match n = " + std::to_string(n));
    return !has_zero_sum_subset(X, static_cast<std::size_t>(n));
}

struct FDeterminationResult {
    Coord n = 0;
    std::size_t k = 0;
    std::size_t f = 0;
    /// A family of f-1 points with no zero-sum n-subset.
    PointFamily witness;
    std::uint64_t multisets_examined = 0;
};

namespace detail {

// Reachability DP on precoded points against a dense Cayley table.
inline bool codes_have_zero_sum_subset(std::span<const std::uint32_t> codes, std::size_t j,
                                       std::size_t G, std::span<const std::uint32_t> cayley,
                                       std::vector<std::vector<char>>& scratch) {
    if (j > codes.size()) return false;
    for (auto& row : scratch)
        for (auto& c : row) c = 0;
    scratch[0][0] = 1;
    std::size_t seen = 0;
    for (std::uint32_t x : codes) {
        const std::uint32_t* add = cayley.data() + static_cast<std::size_t>(x) * G;
        ++seen;
        for (std::size_t jj = std::min(seen, j); jj >= 1; --jj) {
            const auto& prev = scratch[jj - 1];
            auto& cur = scratch[jj];
            for (std::size_t g = 0; g < G; ++g)
                if (prev[g]) cur[add[g]] = 1;
        }
        if (scratch[j][0]) return true;
    }
    return false;
}

} // namespace detail

/// Determine f(n, k) by exhaustive search: f is the least s such that every
/// canonical multiset of s residue vectors contains a zero-sum n-subset.
///
/// Multisets are enumerated as nondecreasing sequences of mixed-radix codes;
/// zero-sum counts depend only on the multiset of residues, so this quotient
/// is exact. The budget bounds the total number of multisets the search may
/// have to enumerate; when a size class would blow past it the search refuses
/// up front with the offending count.
inline FDeterminationResult brute_force_f(Coord n, std::size_t k,
                                          std::uint64_t budget = 10'000'000) {
    if (n < 2)
        throw invalid_modulus_error("brute_force_f: modulus must be at least 2, got " +
                                    std::to_string(n));
    if (k < 1 || k > 2)
        throw invalid_input_error("brute_force_f: only k = 1 and k = 2 are supported");

    const auto G64 = group_order(n, k);
    const auto G = static_cast<std::size_t>(G64);
    // dense Cayley table of Z_n^k on codes
    std::vector<std::uint32_t> cayley(G * G);
    for (std::size_t a = 0; a < G; ++a) {
        const auto row = add_code_table(decode_point(a, n, k));
        std::copy(row.begin(), row.end(), cayley.begin() + a * G);
    }

    std::uint64_t examined = 0;
    Bigint planned = 0;
    std::vector<std::uint32_t> witness_codes;
    std::vector<std::vector<char>> scratch(static_cast<std::size_t>(n) + 1,
                                           std::vector<char>(G, 0));

    for (std::size_t s = 1;; ++s) {
        const Bigint size_count = binomial(s + G - 1, G - 1);
        planned += size_count;
        if (planned > budget)
            throw resource_limit_error(
                "brute_force_f: size " + std::to_string(s) + " has " + size_count.str() +
                " canonical multisets (cumulative " + planned.str() + "), budget is " +
                std::to_string(budget));

        bool all_contain = true;
        std::vector<std::uint32_t> m(s, 0);
        while (true) {
            ++examined;
            if (!detail::codes_have_zero_sum_subset(m, static_cast<std::size_t>(n), G, cayley,
                                                    scratch)) {
                witness_codes = m;
                all_contain = false;
                break;
            }
            // next nondecreasing sequence
            std::size_t i = s;
            while (i > 0 && m[i - 1] == G - 1) --i;
            if (i == 0) break;
            const std::uint32_t v = ++m[i - 1];
            for (std::size_t l = i; l < s; ++l) m[l] = v;
        }

        if (all_contain) {
            FDeterminationResult r;
            r.n = n;
            r.k = k;
            r.f = s;
            r.witness = make_family(n, k);
            for (std::uint32_t code : witness_codes)
                append_point(r.witness, decode_point(code, n, k));
            r.multisets_examined = examined;
            return r;
        }
    }
}

} // namespace zerosum
