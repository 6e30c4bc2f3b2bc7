#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "residue.hpp"

namespace zerosum {

/// A claimed zero-sum subset: indices into the input family. Certificates
/// are independently checkable with verify_certificate.
struct Certificate {
    std::vector<std::size_t> indices; // sorted, distinct
    std::size_t target_size = 0;
    GroupSum claimed_sum;
};

/// True iff the certificate is well-formed against X and its recomputed sum
/// is zero mod n. Malformed certificates yield false, never an exception.
inline bool verify_certificate(const PointFamily& X, Coord n, const Certificate& cert) {
    if (n < 2) return false;
    if (cert.indices.size() != cert.target_size) return false;
    std::vector<char> seen(X.size(), 0);
    for (std::size_t i : cert.indices) {
        if (i >= X.size() || seen[i]) return false;
        seen[i] = 1;
    }
    std::vector<Coord> sum(X.k, 0);
    for (std::size_t i : cert.indices)
        for (std::size_t c = 0; c < X.k; ++c) sum[c] = (sum[c] + X.points[i].coords[c]) % n;
    for (Coord c : sum)
        if (c != 0) return false;
    return true;
}

/// Reachability DP over (points seen, chosen count, sum residue) with
/// exclude-first backward reconstruction. Deterministic: the scan order is
/// the index order, and reconstruction takes a point only when the state is
/// unreachable without it.
inline std::optional<std::vector<std::size_t>> find_zero_sum_subset(const PointFamily& X,
                                                                    std::size_t subset_size) {
    if (subset_size == 0) return std::vector<std::size_t>{};
    if (subset_size > X.size()) return std::nullopt;

    const auto order = group_order(X.n, X.k);
    const std::size_t N = X.size();
    const std::size_t J = subset_size;
    if (order > 250'000'000 / ((N + 1) * (J + 1)))
        throw resource_limit_error("find_zero_sum_subset: DP table of " + std::to_string(N + 1) +
                                   " x " + std::to_string(J + 1) + " x " + std::to_string(order) +
                                   " states exceeds memory budget");
    const auto G = static_cast<std::size_t>(order);

    // sub[i][g] = g - x_i, as an add table of the negated point
    std::vector<std::vector<std::uint32_t>> sub;
    sub.reserve(N);
    for (const auto& x : X.points) sub.push_back(add_code_table(negate_point(x)));

    const auto at = [&](std::size_t i, std::size_t j, std::size_t g) {
        return (i * (J + 1) + j) * G + g;
    };
    std::vector<char> dp(static_cast<std::size_t>(N + 1) * (J + 1) * G, 0);
    dp[at(0, 0, 0)] = 1;
    for (std::size_t i = 1; i <= N; ++i) {
        const auto& back = sub[i - 1];
        for (std::size_t j = 0; j <= std::min(i, J); ++j)
            for (std::size_t g = 0; g < G; ++g) {
                char v = dp[at(i - 1, j, g)];
                if (!v && j > 0) v = dp[at(i - 1, j - 1, back[g])];
                dp[at(i, j, g)] = v;
            }
    }
    if (!dp[at(N, J, 0)]) return std::nullopt;

    std::vector<std::size_t> picked;
    std::size_t j = J;
    std::size_t g = 0;
    for (std::size_t i = N; i > 0; --i) {
        if (dp[at(i - 1, j, g)]) continue; // exclude point i-1 whenever possible
        picked.push_back(i - 1);
        g = sub[i - 1][g];
        --j;
    }
    std::reverse(picked.begin(), picked.end());
    return picked;
}

/// Erdos-Ginzburg-Ziv solver: n indices among the given integers whose sum
/// is divisible by n. Guaranteed to succeed when at least 2n-1 values are
/// supplied; with fewer it still searches and may report not-found.
inline std::optional<Certificate> egz_solve(std::span<const std::int64_t> values, Coord n) {
    if (n < 2)
        throw invalid_modulus_error("egz_solve: modulus must be at least 2, got " +
                                    std::to_string(n));
    PointFamily X = make_family(n, 1);
    for (std::int64_t v : values) append_raw(X, std::span<const Coord>(&v, 1));

    auto picked = find_zero_sum_subset(X, static_cast<std::size_t>(n));
    if (!picked) {
        if (values.size() >= 2 * static_cast<std::size_t>(n) - 1)
            throw std::logic_error("egz_solve: no subset found on a guaranteed-size input");
        return std::nullopt;
    }
    Certificate cert{std::move(*picked), static_cast<std::size_t>(n), ResidueVec{{0}, n}};
    return cert;
}

/// Kemnitz solver for planar families: n indices whose coordinatewise sum is
/// zero mod n. Guaranteed to succeed when |X| >= 4n-3; not-found is possible
/// only below that threshold.
inline std::optional<Certificate> kemnitz_solve(const PointFamily& X) {
    const Coord n = X.n;
    if (X.k != 2)
        throw invalid_input_error("kemnitz_solve: expects planar families (k = 2), got k = " +
                                  std::to_string(X.k));
    auto picked = find_zero_sum_subset(X, static_cast<std::size_t>(n));
    if (!picked) {
        if (X.size() >= 4 * static_cast<std::size_t>(n) - 3)
            throw std::logic_error("kemnitz_solve: no subset found on a guaranteed-size input");
        return std::nullopt;
    }
    Certificate cert{std::move(*picked), static_cast<std::size_t>(n),
                     ResidueVec{{0, 0}, n}};
    return cert;
}

namespace detail {

inline std::vector<Coord> factorize(Coord n) {
    std::vector<Coord> out;
    Coord m = n;
    for (Coord d = 2; d * d <= m; ++d)
        while (m % d == 0) {
            out.push_back(d);
            m /= d;
        }
    if (m > 1) out.push_back(m);
    return out;
}

// Multiplicative reduction over the ascending prime factorization,
// left-associated: n = (q_1 ... q_{m-1}) * q_m.
inline std::optional<Certificate> compose_impl(const PointFamily& X,
                                               std::span<const Coord> factors) {
    if (factors.size() == 1) return kemnitz_solve(X);

    const Coord b = factors.back();
    Coord a = 1;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) a *= factors[i];
    const auto ua = static_cast<std::size_t>(a);
    const auto ub = static_cast<std::size_t>(b);

    const PointFamily Xa = reduce_family(X, a);

    // extract disjoint a-subsets with sum == 0 (mod a) while enough points remain
    std::vector<std::size_t> pool(X.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
    std::vector<std::vector<std::size_t>> blocks;
    while (pool.size() >= 4 * ua - 3) {
        PointFamily sub = make_family(a, 2);
        for (std::size_t i : pool) sub.points.push_back(Xa.points[i]);
        const auto part = compose_impl(sub, factors.first(factors.size() - 1));
        if (!part) return std::nullopt;
        std::vector<std::size_t> block;
        block.reserve(ua);
        for (std::size_t local : part->indices) block.push_back(pool[local]);
        // drop the chosen indices from the pool (locals are ascending)
        for (auto it = part->indices.rbegin(); it != part->indices.rend(); ++it)
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(*it));
        blocks.push_back(std::move(block));
    }
    if (blocks.size() < 4 * ub - 3) return std::nullopt;

    // each block sum is divisible by a; the quotients are the derived points
    PointFamily derived = make_family(b, 2);
    for (const auto& block : blocks) {
        Coord s0 = 0;
        Coord s1 = 0;
        for (std::size_t i : block) {
            s0 += X.points[i].coords[0];
            s1 += X.points[i].coords[1];
        }
        if (s0 % a != 0 || s1 % a != 0)
            throw std::logic_error("compose_solve: extracted block sum not divisible by a");
        const Coord row[2] = {s0 / a, s1 / a};
        append_raw(derived, std::span<const Coord>(row, 2));
    }

    const auto top = kemnitz_solve(derived);
    if (!top) return std::nullopt;

    Certificate cert;
    cert.target_size = ua * ub;
    cert.claimed_sum = ResidueVec{{0, 0}, X.n};
    for (std::size_t bi : top->indices)
        cert.indices.insert(cert.indices.end(), blocks[bi].begin(), blocks[bi].end());
    std::sort(cert.indices.begin(), cert.indices.end());
    return cert;
}

} // namespace detail

/// Kemnitz solver via the multiplicative reduction: extract zero-sum
/// a-subsets, divide their sums by a, and solve the derived family mod b.
/// Falls back to the direct DP when the reduction starves on a sub-threshold
/// input, so compose and direct agree on solvability.
inline std::optional<Certificate> compose_solve(const PointFamily& X) {
    if (X.k != 2)
        throw invalid_input_error("compose_solve: expects planar families (k = 2), got k = " +
                                  std::to_string(X.k));
    const auto factors = detail::factorize(X.n);
    auto cert = detail::compose_impl(X, factors);
    if (cert) {
        if (!verify_certificate(X, X.n, *cert))
            throw std::logic_error("compose_solve: produced certificate failed verification");
        return cert;
    }
    if (X.size() >= 4 * static_cast<std::size_t>(X.n) - 3)
        throw std::logic_error("compose_solve: reduction starved on a guaranteed-size input");
    return kemnitz_solve(X);
}

} // namespace zerosum
