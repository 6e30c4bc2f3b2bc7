#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "counting.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "residue.hpp"

namespace zerosum {

/// Outcome of one congruence check. The left-hand side is reported as its
/// canonical residue in [0, p); 0 means the identity holds on this input.
/// `witness` carries the substituted counts (j, N_j mod p) so a failure can
/// be diagnosed from the report alone.
struct IdentityReport {
    std::string identity;
    Coord p = 0;
    std::size_t family_size = 0;
    bool size_precondition_met = false;
    std::uint32_t lhs_residue = 0;
    std::vector<std::pair<std::size_t, std::uint32_t>> witness;

    bool pass() const { return size_precondition_met && lhs_residue == 0; }
};

namespace detail {

inline void require_planar_mod_p(const PointFamily& X, Coord p, const char* who) {
    require_odd_prime(p, who);
    if (X.n != p)
        throw invalid_input_error(std::string(who) + ": family modulus " + std::to_string(X.n) +
                                  " does not match p = " + std::to_string(p));
    if (X.k != 2)
        throw invalid_input_error(std::string(who) + ": expects planar families (k = 2), got k = " +
                                  std::to_string(X.k));
}

inline void require_size(const PointFamily& X, std::size_t expected, const char* who,
                         const char* formula) {
    if (X.size() != expected)
        throw precondition_error(std::string(who) + ": expected |X| = " + formula + " = " +
                                 std::to_string(expected) + ", got " + std::to_string(X.size()));
}

/// The family without the points at the given (sorted or unsorted) indices.
inline PointFamily family_excluding(const PointFamily& X, std::span<const std::size_t> drop) {
    std::vector<char> dead(X.size(), 0);
    for (std::size_t i : drop) dead[i] = 1;
    PointFamily Y = make_family(X.n, X.k);
    Y.points.reserve(X.size() - drop.size());
    for (std::size_t i = 0; i < X.size(); ++i)
        if (!dead[i]) Y.points.push_back(X.points[i]);
    return Y;
}

inline std::uint64_t subset_sum_code(const PointFamily& X, std::span<const std::size_t> idx) {
    ResidueVec s;
    s.n = X.n;
    s.coords.assign(X.k, 0);
    for (std::size_t i : idx)
        for (std::size_t c = 0; c < X.k; ++c) {
            s.coords[c] += X.points[i].coords[c];
            if (s.coords[c] >= X.n) s.coords[c] -= X.n;
        }
    return encode_point(s);
}

} // namespace detail

/// Corollary 1: for |J| = 3p-3,
///   1 - N_{p-1} - N_p + N_{2p-1} + N_{2p} == 0 (mod p).
inline IdentityReport check_cor1(const PointFamily& J, Coord p) {
    detail::require_planar_mod_p(J, p, "check_cor1");
    const auto P = static_cast<std::size_t>(p);
    detail::require_size(J, 3 * P - 3, "check_cor1", "3p-3");

    const auto t = count_mod_p(J, p);
    const std::int64_t n1 = t.zero_count(P - 1);
    const std::int64_t n2 = t.zero_count(P);
    const std::int64_t n3 = t.zero_count(2 * P - 1);
    const std::int64_t n4 = t.zero_count(2 * P);

    IdentityReport r{"cor1", p, J.size(), true, 0, {}};
    r.witness = {{P - 1, static_cast<std::uint32_t>(n1)},
                 {P, static_cast<std::uint32_t>(n2)},
                 {2 * P - 1, static_cast<std::uint32_t>(n3)},
                 {2 * P, static_cast<std::uint32_t>(n4)}};
    r.lhs_residue = canonical_residue(1 - n1 - n2 + n3 + n4, p);
    return r;
}

/// Corollary 2a plus its 2b consequence.
struct Cor2Report {
    IdentityReport report;      // residue of 1 - N_p + N_{2p}
    bool p_count_is_zero = false; // exact: no zero-sum p-subset at all
    bool consequence_holds = true; // 2b: p_count_is_zero implies N_{2p} == -1 (mod p)
    bool pass() const { return report.pass() && consequence_holds; }
};

/// Corollary 2: for |J| in {3p-2, 3p-1}, 1 - N_p + N_{2p} == 0 (mod p);
/// and if the exact count N_p is zero then N_{2p} == -1 (mod p).
inline Cor2Report check_cor2(const PointFamily& J, Coord p) {
    detail::require_planar_mod_p(J, p, "check_cor2");
    const auto P = static_cast<std::size_t>(p);
    if (J.size() != 3 * P - 2 && J.size() != 3 * P - 1)
        throw precondition_error("check_cor2: expected |J| = 3p-2 = " + std::to_string(3 * P - 2) +
                                 " or 3p-1 = " + std::to_string(3 * P - 1) + ", got " +
                                 std::to_string(J.size()));

    const auto t = count_mod_p(J, p);
    const std::int64_t np = t.zero_count(P);
    const std::int64_t n2p = t.zero_count(2 * P);

    Cor2Report out;
    out.report = IdentityReport{"cor2", p, J.size(), true, 0, {}};
    out.report.witness = {{P, static_cast<std::uint32_t>(np)},
                          {2 * P, static_cast<std::uint32_t>(n2p)}};
    out.report.lhs_residue = canonical_residue(1 - np + n2p, p);
    out.p_count_is_zero = !has_zero_sum_subset(J, P);
    out.consequence_holds = !out.p_count_is_zero || n2p == p - 1;
    return out;
}

/// Corollary 3: a 3p-point family with zero total sum has a zero-sum
/// p-subset. Returns the exact-count positivity; the paper guarantees true.
inline bool check_cor3(const PointFamily& J, Coord p) {
    detail::require_planar_mod_p(J, p, "check_cor3");
    const auto P = static_cast<std::size_t>(p);
    detail::require_size(J, 3 * P, "check_cor3", "3p");
    if (!family_sum(J).is_zero())
        throw precondition_error("check_cor3: family sum must be congruent to zero");
    return count_exact(J).zero_count(P) > 0;
}

/// Corollary 4 at |X| = 4p-3:
///   (a) -1 + N_p - N_{2p} + N_{3p} == 0 (mod p)
///   (b) N_{p-1} - N_{2p-1} + N_{3p-1} == 0 (mod p)
inline std::pair<IdentityReport, IdentityReport> check_cor4(const PointFamily& X, Coord p) {
    detail::require_planar_mod_p(X, p, "check_cor4");
    const auto P = static_cast<std::size_t>(p);
    detail::require_size(X, 4 * P - 3, "check_cor4", "4p-3");

    const auto t = count_mod_p(X, p);
    auto N = [&](std::size_t j) { return static_cast<std::int64_t>(t.zero_count(j)); };

    IdentityReport a{"cor4a", p, X.size(), true, 0, {}};
    a.witness = {{P, static_cast<std::uint32_t>(N(P))},
                 {2 * P, static_cast<std::uint32_t>(N(2 * P))},
                 {3 * P, static_cast<std::uint32_t>(N(3 * P))}};
    a.lhs_residue = canonical_residue(-1 + N(P) - N(2 * P) + N(3 * P), p);

    IdentityReport b{"cor4b", p, X.size(), true, 0, {}};
    b.witness = {{P - 1, static_cast<std::uint32_t>(N(P - 1))},
                 {2 * P - 1, static_cast<std::uint32_t>(N(2 * P - 1))},
                 {3 * P - 1, static_cast<std::uint32_t>(N(3 * P - 1))}};
    b.lhs_residue = canonical_residue(N(P - 1) - N(2 * P - 1) + N(3 * P - 1), p);
    return {a, b};
}

/// Corollary 5 at |X| = 4p-3:
///   3 - 2 N_{p-1} - 2 N_p + N_{2p-1} + N_{2p} == 0 (mod p).
inline IdentityReport check_cor5(const PointFamily& X, Coord p) {
    detail::require_planar_mod_p(X, p, "check_cor5");
    const auto P = static_cast<std::size_t>(p);
    detail::require_size(X, 4 * P - 3, "check_cor5", "4p-3");

    const auto t = count_mod_p(X, p);
    auto N = [&](std::size_t j) { return static_cast<std::int64_t>(t.zero_count(j)); };

    IdentityReport r{"cor5", p, X.size(), true, 0, {}};
    r.witness = {{P - 1, static_cast<std::uint32_t>(N(P - 1))},
                 {P, static_cast<std::uint32_t>(N(P))},
                 {2 * P - 1, static_cast<std::uint32_t>(N(2 * P - 1))},
                 {2 * P, static_cast<std::uint32_t>(N(2 * P))}};
    r.lhs_residue = canonical_residue(3 - 2 * N(P - 1) - 2 * N(P) + N(2 * P - 1) + N(2 * P), p);
    return r;
}

/// The unconditional sum of Corollaries 4a + 4b + 5 plus the main theorem's
/// positivity claim.
struct CombinedReport {
    IdentityReport report;       // residue of 2 - N_p - N_{p-1} + N_{3p} + N_{3p-1}
    bool p_subset_exists = false; // exact: some zero-sum p-subset exists
    bool pass() const { return report.pass() && p_subset_exists; }
};

/// At |X| = 4p-3: 2 - N_p - N_{p-1} + N_{3p} + N_{3p-1} == 0 (mod p), and
/// some zero-sum p-subset exists (exact positivity, not just a residue).
inline CombinedReport check_combined(const PointFamily& X, Coord p) {
    detail::require_planar_mod_p(X, p, "check_combined");
    const auto P = static_cast<std::size_t>(p);
    detail::require_size(X, 4 * P - 3, "check_combined", "4p-3");

    const auto t = count_mod_p(X, p);
    auto N = [&](std::size_t j) { return static_cast<std::int64_t>(t.zero_count(j)); };

    CombinedReport out;
    out.report = IdentityReport{"combined", p, X.size(), true, 0, {}};
    out.report.witness = {{P - 1, static_cast<std::uint32_t>(N(P - 1))},
                          {P, static_cast<std::uint32_t>(N(P))},
                          {3 * P - 1, static_cast<std::uint32_t>(N(3 * P - 1))},
                          {3 * P, static_cast<std::uint32_t>(N(3 * P))}};
    out.report.lhs_residue =
        canonical_residue(2 - N(P) - N(P - 1) + N(3 * P) + N(3 * P - 1), p);
    out.p_subset_exists = has_zero_sum_subset(X, P);
    return out;
}

/// The three routes to chi, the number of partitions X = A u B u C with
/// |A| = p-1, |B| = p-2, |C| = 2p and sum A == 0, sum B == sum X,
/// sum C == 0. All three totals are exact integers and must coincide.
struct ChiResult {
    Bigint chi;   // admissible B counted directly inside each X - A
    Bigint via_a; // complements C counted inside each X - A
    Bigint via_b; // complements C counted inside each X - B
    bool consistent() const { return chi == via_a && via_a == via_b; }
};

inline ChiResult chi_double_count(const PointFamily& X, Coord p,
                                  std::uint64_t subset_budget = 20'000'000) {
    detail::require_planar_mod_p(X, p, "chi_double_count");
    const auto P = static_cast<std::size_t>(p);
    detail::require_size(X, 4 * P - 3, "chi_double_count", "4p-3");
    if (binomial(X.size(), P - 1) + binomial(X.size(), P - 2) > subset_budget)
        throw resource_limit_error(
            "chi_double_count: C(" + std::to_string(X.size()) + ", " + std::to_string(P - 1) +
            ") + C(" + std::to_string(X.size()) + ", " + std::to_string(P - 2) +
            ") subsets exceed the enumeration budget " + std::to_string(subset_budget));

    const std::uint64_t sigma = encode_point(family_sum(X));

    ChiResult r;
    for_each_combination(X.size(), P - 1, [&](std::span<const std::size_t> a) {
        if (detail::subset_sum_code(X, a) != 0) return;
        const auto t = count_exact(detail::family_excluding(X, a));
        r.chi += t.at(P - 2, sigma);
        r.via_a += t.zero_count(2 * P);
    });
    for_each_combination(X.size(), P - 2, [&](std::span<const std::size_t> b) {
        if (detail::subset_sum_code(X, b) != sigma) return;
        r.via_b += count_exact(detail::family_excluding(X, b)).zero_count(2 * P);
    });
    return r;
}

} // namespace zerosum
