#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "counting.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "random.hpp"
#include "residue.hpp"

namespace zerosum {

/// One monomial: coefficient in [0, p) and an exponent per variable.
struct Monomial {
    std::uint32_t coeff = 0;
    std::vector<std::uint32_t> exponents;
};

/// Sparse polynomial over F_p. An empty monomial list is the zero polynomial.
struct SparsePolynomial {
    std::vector<Monomial> monomials;

    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (const auto& m : monomials) {
            std::uint32_t s = 0;
            for (std::uint32_t e : m.exponents) s += e;
            d = std::max(d, s);
        }
        return d;
    }
};

struct PolynomialSystem {
    Coord p = 0;
    std::uint32_t nvars = 0;
    std::vector<SparsePolynomial> polys;

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& q : polys) d += q.degree();
        return d;
    }
};

/// Merge duplicate exponent vectors, reduce coefficients mod p, drop zeros.
inline SparsePolynomial normalize_polynomial(const SparsePolynomial& q, Coord p) {
    std::map<std::vector<std::uint32_t>, std::uint64_t> acc;
    for (const auto& m : q.monomials) acc[m.exponents] += m.coeff % static_cast<std::uint64_t>(p);
    SparsePolynomial out;
    for (auto& [expo, c] : acc) {
        const auto r = static_cast<std::uint32_t>(c % static_cast<std::uint64_t>(p));
        if (r != 0) out.monomials.push_back(Monomial{r, expo});
    }
    return out;
}

inline PolynomialSystem make_system(Coord p, std::uint32_t nvars,
                                    std::vector<SparsePolynomial> polys) {
    require_odd_prime(p, "make_system");
    if (nvars == 0) throw invalid_input_error("make_system: system needs at least one variable");
    PolynomialSystem s{p, nvars, {}};
    s.polys.reserve(polys.size());
    for (auto& q : polys) {
        for (const auto& m : q.monomials)
            if (m.exponents.size() != nvars)
                throw invalid_input_error("make_system: monomial has " +
                                          std::to_string(m.exponents.size()) +
                                          " exponents, expected " + std::to_string(nvars));
        s.polys.push_back(normalize_polynomial(q, p));
    }
    return s;
}

/// Number of common zeros, split on whether the last variable vanishes.
struct ZeroCountResult {
    std::uint64_t omega = 0;
    std::uint64_t class_at_zero = 0;
    std::uint64_t class_nonzero = 0;
};

/// Exhaustive count of the common zeros of S over F_p^nvars. Refuses rather
/// than samples when p^nvars exceeds the evaluation budget.
inline ZeroCountResult count_common_zeros(const PolynomialSystem& S,
                                          std::uint64_t budget = 100'000'000) {
    const auto up = static_cast<std::uint64_t>(S.p);
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < S.nvars; ++i) {
        if (total > budget / up)
            throw resource_limit_error("count_common_zeros: p^nvars = " + std::to_string(S.p) +
                                       "^" + std::to_string(S.nvars) + " exceeds budget " +
                                       std::to_string(budget));
        total *= up;
    }
    if (total > budget)
        throw resource_limit_error("count_common_zeros: p^nvars exceeds budget " +
                                   std::to_string(budget));

    std::uint32_t max_exp = 0;
    for (const auto& q : S.polys)
        for (const auto& m : q.monomials)
            for (std::uint32_t e : m.exponents) max_exp = std::max(max_exp, e);

    // pw[y][e] = y^e mod p
    std::vector<std::vector<std::uint32_t>> pw(up, std::vector<std::uint32_t>(max_exp + 1, 1));
    for (std::uint64_t y = 0; y < up; ++y)
        for (std::uint32_t e = 1; e <= max_exp; ++e)
            pw[y][e] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(pw[y][e - 1]) * y % up);

    ZeroCountResult r;
    std::vector<std::uint32_t> x(S.nvars, 0);
    for (std::uint64_t step = 0; step < total; ++step) {
        bool zero = true;
        for (const auto& q : S.polys) {
            std::uint64_t acc = 0;
            for (const auto& m : q.monomials) {
                std::uint64_t term = m.coeff;
                for (std::uint32_t v = 0; v < S.nvars; ++v) {
                    const std::uint32_t e = m.exponents[v];
                    if (e != 0) term = term * pw[x[v]][e] % up;
                }
                acc += term;
            }
            if (acc % up != 0) {
                zero = false;
                break;
            }
        }
        if (zero) {
            ++r.omega;
            if (x[S.nvars - 1] == 0)
                ++r.class_at_zero;
            else
                ++r.class_nonzero;
        }
        for (std::uint32_t v = 0; v < S.nvars; ++v) {
            if (++x[v] < up) break;
            x[v] = 0;
        }
    }
    return r;
}

/// sum_{y in F_p} y^r mod p; zero for 1 <= r <= p-2, the power-sum fact the
/// Chevalley-Warning proof turns on.
inline std::uint32_t power_sum_mod_p(Coord p, std::uint64_t r) {
    require_odd_prime(p, "power_sum_mod_p");
    const auto up = static_cast<std::uint64_t>(p);
    std::uint64_t acc = 0;
    for (std::uint64_t y = 0; y < up; ++y) acc = (acc + pow_mod(y, r, up)) % up;
    return static_cast<std::uint32_t>(acc);
}

/// Random sparse system with one polynomial per requested degree. The
/// degree-sum hypothesis of Chevalley-Warning is a hard gate: systems with
/// sum of degrees >= nvars are rejected, not generated.
inline PolynomialSystem random_system(Coord p, std::uint32_t nvars,
                                      std::span<const std::uint32_t> degrees,
                                      std::uint64_t seed) {
    require_odd_prime(p, "random_system");
    std::uint64_t degree_sum = 0;
    for (std::uint32_t d : degrees) degree_sum += d;
    if (degree_sum >= nvars)
        throw precondition_error("random_system: degree sum " + std::to_string(degree_sum) +
                                 " must be less than nvars = " + std::to_string(nvars));

    SplitMix64 rng{seed};
    std::vector<SparsePolynomial> polys;
    for (std::uint32_t d : degrees) {
        SparsePolynomial q;
        const std::uint64_t nmono = 1 + rng.below(nvars + 2);
        for (std::uint64_t t = 0; t < nmono; ++t) {
            Monomial m;
            m.exponents.assign(nvars, 0);
            const std::uint64_t tot = rng.below(d + 1);
            for (std::uint64_t u = 0; u < tot; ++u) ++m.exponents[rng.below(nvars)];
            m.coeff = static_cast<std::uint32_t>(1 + rng.below(static_cast<std::uint64_t>(p) - 1));
            q.monomials.push_back(std::move(m));
        }
        polys.push_back(std::move(q));
    }
    return make_system(p, nvars, std::move(polys));
}

struct ChevalleySummary {
    Coord p = 0;
    std::uint32_t nvars = 0;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::vector<std::uint64_t> failing_seeds;
    bool pass() const { return failures == 0; }
};

/// Generate `trials` random systems under the degree hypothesis and assert
/// omega == 0 (mod p) for each.
inline ChevalleySummary check_chevalley_random(Coord p, std::uint32_t nvars,
                                               std::span<const std::uint32_t> degrees,
                                               std::size_t trials, std::uint64_t seed,
                                               std::uint64_t budget = 100'000'000) {
    ChevalleySummary s;
    s.p = p;
    s.nvars = nvars;
    s.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t inst = derive_seed(seed, {static_cast<std::uint64_t>(t)});
        const auto sys = random_system(p, nvars, degrees, inst);
        const auto r = count_common_zeros(sys, budget);
        if (r.omega % static_cast<std::uint64_t>(p) != 0) {
            ++s.failures;
            s.failing_seeds.push_back(inst);
        }
    }
    return s;
}

/// The three polynomials of the Corollary 1 proof for a (3p-3)-point planar
/// family J = {(a_i, b_i)}:
///   P1 = sum_i x_i^{p-1} + x_{3p-2}^{p-1}
///   P2 = sum_i a_i x_i^{p-1}
///   P3 = sum_i b_i x_i^{p-1}
/// in 3p-2 variables over F_p.
inline PolynomialSystem build_cor1_system(const PointFamily& J) {
    const Coord p = J.n;
    require_odd_prime(p, "build_cor1_system");
    if (J.k != 2)
        throw invalid_input_error("build_cor1_system: expects planar families (k = 2), got k = " +
                                  std::to_string(J.k));
    const auto P = static_cast<std::size_t>(p);
    if (J.size() != 3 * P - 3)
        throw precondition_error("build_cor1_system: expected |J| = 3p-3 = " +
                                 std::to_string(3 * P - 3) + ", got " + std::to_string(J.size()));
    const auto nvars = static_cast<std::uint32_t>(3 * P - 2);
    const auto e = static_cast<std::uint32_t>(P - 1);

    auto power_monomial = [&](std::size_t var, std::uint32_t coeff) {
        Monomial m;
        m.coeff = coeff;
        m.exponents.assign(nvars, 0);
        m.exponents[var] = e;
        return m;
    };

    SparsePolynomial p1, p2, p3;
    for (std::size_t i = 0; i < nvars; ++i) p1.monomials.push_back(power_monomial(i, 1));
    for (std::size_t i = 0; i < J.size(); ++i) {
        const auto a = static_cast<std::uint32_t>(J.points[i].coords[0]);
        const auto b = static_cast<std::uint32_t>(J.points[i].coords[1]);
        if (a != 0) p2.monomials.push_back(power_monomial(i, a));
        if (b != 0) p3.monomials.push_back(power_monomial(i, b));
    }
    return make_system(p, nvars, {p1, p2, p3});
}

/// Exhaustive verification of the Corollary 1 proof's class decomposition:
/// zeros with x_{3p-2} = 0 number 1 + (p-1)^p N_p + (p-1)^{2p} N_{2p}, the
/// rest number (p-1)^p N_{p-1} + (p-1)^{2p} N_{2p-1}, with exact counts from
/// the counting module. Supported for p = 3 only (3^7 evaluations).
struct Cor1Decomposition {
    std::uint64_t omega = 0;
    std::uint64_t class_at_zero = 0;
    std::uint64_t class_nonzero = 0;
    Bigint expected_at_zero;
    Bigint expected_nonzero;
    bool omega_divisible = false;

    bool pass() const {
        return omega_divisible && expected_at_zero == class_at_zero &&
               expected_nonzero == class_nonzero;
    }
};

inline Cor1Decomposition verify_cor1_decomposition(const PointFamily& J) {
    const Coord p = J.n;
    if (p != 3)
        throw resource_limit_error(
            "verify_cor1_decomposition: exhaustive check supports p = 3 only (p^(3p-2) "
            "evaluations), got p = " +
            std::to_string(p));
    const auto sys = build_cor1_system(J);
    const auto zeros = count_common_zeros(sys);
    const auto t = count_exact(J);
    const auto P = static_cast<std::size_t>(p);

    const Bigint w_p = boost::multiprecision::pow(Bigint(p - 1), static_cast<unsigned>(P));
    const Bigint w_2p = boost::multiprecision::pow(Bigint(p - 1), static_cast<unsigned>(2 * P));

    Cor1Decomposition d;
    d.omega = zeros.omega;
    d.class_at_zero = zeros.class_at_zero;
    d.class_nonzero = zeros.class_nonzero;
    d.expected_at_zero = 1 + w_p * t.zero_count(P) + w_2p * t.zero_count(2 * P);
    d.expected_nonzero = w_p * t.zero_count(P - 1) + w_2p * t.zero_count(2 * P - 1);
    d.omega_divisible = zeros.omega % static_cast<std::uint64_t>(p) == 0;
    return d;
}

} // namespace zerosum
