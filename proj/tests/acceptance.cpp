// Acceptance suite: runs every acceptance criterion at its stated size and
// tolerance (all congruence checks are exact) and prints one line per
// criterion. Exit status is zero iff every criterion passes.

#include <array>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zerosum/zerosum.hpp"

using namespace zerosum;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome fail(std::string why) { return Outcome{false, std::move(why)}; }

constexpr std::uint64_t kMasterSeed = 20260810;

// --- criterion 1: identity suite -------------------------------------------

Outcome identity_suite() {
    const std::array<Coord, 5> primes{3, 5, 7, 11, 13};
    const std::size_t trials = 200;
    std::size_t checks = 0;

    for (Coord p : primes) {
        const auto P = static_cast<std::size_t>(p);
        const auto up = static_cast<std::uint64_t>(p);
        for (std::size_t t = 0; t < trials; ++t) {
            {
                const auto seed = derive_seed(kMasterSeed, {1, up, t});
                const auto J = random_family(p, 2, 3 * P - 3, seed);
                if (check_cor1(J, p).lhs_residue != 0)
                    return fail("cor1 residue nonzero at p=" + std::to_string(p) +
                                " seed=" + std::to_string(seed));
                ++checks;
            }
            for (std::size_t size : {3 * P - 2, 3 * P - 1}) {
                const auto seed = derive_seed(kMasterSeed, {2, up, size, t});
                const auto J = random_family(p, 2, size, seed);
                const auto r = check_cor2(J, p);
                if (r.report.lhs_residue != 0 || !r.consequence_holds)
                    return fail("cor2 failed at p=" + std::to_string(p) +
                                " size=" + std::to_string(size) +
                                " seed=" + std::to_string(seed));
                ++checks;
            }
            {
                const auto seed = derive_seed(kMasterSeed, {3, up, t});
                const auto J =
                    random_family(p, 2, 3 * P, seed, FamilyMode::zero_sum_conditioned);
                if (!check_cor3(J, p))
                    return fail("cor3 positivity failed at p=" + std::to_string(p) +
                                " seed=" + std::to_string(seed));
                ++checks;
            }
            {
                const auto seed = derive_seed(kMasterSeed, {4, up, t});
                const auto X = random_family(p, 2, 4 * P - 3, seed);
                const auto [a, b] = check_cor4(X, p);
                if (a.lhs_residue != 0 || b.lhs_residue != 0)
                    return fail("cor4 residue nonzero at p=" + std::to_string(p) +
                                " seed=" + std::to_string(seed));
                checks += 2;
            }
            {
                const auto seed = derive_seed(kMasterSeed, {5, up, t});
                const auto X = random_family(p, 2, 4 * P - 3, seed);
                if (check_cor5(X, p).lhs_residue != 0)
                    return fail("cor5 residue nonzero at p=" + std::to_string(p) +
                                " seed=" + std::to_string(seed));
                ++checks;
            }
            {
                const auto seed = derive_seed(kMasterSeed, {6, up, t});
                const auto X = random_family(p, 2, 4 * P - 3, seed);
                const auto r = check_combined(X, p);
                if (r.report.lhs_residue != 0 || !r.p_subset_exists)
                    return fail("combined check failed at p=" + std::to_string(p) +
                                " seed=" + std::to_string(seed));
                ++checks;
            }
        }
    }
    return Outcome{true, std::to_string(checks) + " checks, all residues 0, positivity holds"};
}

// --- criterion 2: oracle equivalence ----------------------------------------

Outcome oracle_equivalence() {
    const std::array<Coord, 3> moduli{3, 5, 7};
    std::size_t tables = 0;
    for (std::size_t t = 0; t < 500; ++t) {
        const Coord n = moduli[t % moduli.size()];
        const std::size_t k = 1 + (t / 3) % 3;
        const std::size_t size = t % 19; // 0..18
        const auto seed = derive_seed(kMasterSeed, {10, t});
        const auto X = random_family(n, k, size, seed);

        const auto exact = count_exact(X);
        for (std::size_t j = 0; j <= size; ++j)
            if (exact.zero_count(j) != count_brute_force(X, j))
                return fail("count_exact vs brute force mismatch at seed=" +
                            std::to_string(seed) + " j=" + std::to_string(j));

        const auto mod = count_mod_p(X, n);
        for (std::size_t j = 0; j <= size; ++j)
            for (std::size_t g = 0; g < exact.counts[j].size(); ++g)
                if (mod.counts[j][g] != exact.counts[j][g] % n)
                    return fail("count_mod_p incongruent at seed=" + std::to_string(seed));
        ++tables;
    }
    return Outcome{true, "500 families, zero-class and entrywise congruence exact"};
}

// --- criterion 3: chi double counting ---------------------------------------

Outcome chi_double_counting() {
    for (Coord p : {3, 5}) {
        const auto P = static_cast<std::size_t>(p);
        for (std::size_t t = 0; t < 100; ++t) {
            const auto seed = derive_seed(kMasterSeed, {20, static_cast<std::uint64_t>(p), t});
            const auto X = random_family(p, 2, 4 * P - 3, seed);
            const auto r = chi_double_count(X, p);
            if (!r.consistent())
                return fail("chi != viaA or viaA != viaB at p=" + std::to_string(p) +
                            " seed=" + std::to_string(seed));
            if (p == 3) {
                // direct triple-partition enumeration: A (2 pts), B (1 pt), C the rest
                const auto sigma = family_sum(X);
                Bigint direct = 0;
                for (std::size_t a1 = 0; a1 < X.size(); ++a1)
                    for (std::size_t a2 = a1 + 1; a2 < X.size(); ++a2) {
                        if ((X.points[a1].coords[0] + X.points[a2].coords[0]) % 3 != 0 ||
                            (X.points[a1].coords[1] + X.points[a2].coords[1]) % 3 != 0)
                            continue;
                        for (std::size_t b = 0; b < X.size(); ++b) {
                            if (b == a1 || b == a2) continue;
                            if (X.points[b].coords[0] == sigma.coords[0] &&
                                X.points[b].coords[1] == sigma.coords[1])
                                ++direct;
                        }
                    }
                if (r.chi != direct)
                    return fail("chi does not match the partition enumeration at seed=" +
                                std::to_string(seed));
            }
        }
    }
    return Outcome{true, "100 families per p in {3,5}, exact equality of all three routes"};
}

// --- criterion 4: Chevalley-Warning -----------------------------------------

Outcome chevalley_warning() {
    struct Config {
        Coord p;
        std::uint32_t nvars;
        std::vector<std::uint32_t> degrees;
    };
    const std::vector<Config> configs{{3, 4, {1, 2}}, {3, 6, {1, 2, 2}}, {5, 3, {2}}};
    for (const auto& c : configs) {
        const auto s = check_chevalley_random(
            c.p, c.nvars, c.degrees, 100,
            derive_seed(kMasterSeed, {30, static_cast<std::uint64_t>(c.p), c.nvars}));
        if (!s.pass())
            return fail("omega not divisible by p for (p,nvars)=(" + std::to_string(c.p) + "," +
                        std::to_string(c.nvars) + "), first bad seed " +
                        std::to_string(s.failing_seeds.front()));
    }
    for (std::size_t t = 0; t < 50; ++t) {
        const auto seed = derive_seed(kMasterSeed, {31, t});
        const auto J = random_family(3, 2, 6, seed);
        if (!verify_cor1_decomposition(J).pass())
            return fail("cor1 class decomposition failed at seed=" + std::to_string(seed));
    }
    return Outcome{true,
                   "300 random systems divisible, 50 exact class decompositions at p=3"};
}

// --- criterion 5: small-case f values ---------------------------------------

Outcome small_case_f() {
    if (brute_force_f(2, 2).f != 5) return fail("f(2,2) != 5");
    const auto r32 = brute_force_f(3, 2);
    if (r32.f != 9) return fail("f(3,2) != 9");
    if (!verify_no_zero_sum(r32.witness, 3)) return fail("f(3,2) witness invalid");
    for (Coord n : {2, 3, 4, 5}) {
        const auto r = brute_force_f(n, 1);
        if (r.f != static_cast<std::size_t>(2 * n - 1))
            return fail("f(" + std::to_string(n) + ",1) != 2n-1");
    }
    return Outcome{true, "f(2,2)=5, f(3,2)=9, f(n,1)=2n-1 for n in {2,3,4,5}"};
}

// --- criterion 6: lower-bound configurations ---------------------------------

Outcome lower_bound() {
    for (Coord n = 2; n <= 12; ++n)
        if (!verify_no_zero_sum(extremal_config(n), n))
            return fail("square configuration has a zero-sum subset at n=" + std::to_string(n));
    return Outcome{true, "square configuration zero-sum-free for all n <= 12"};
}

// --- criterion 7: solver guarantees ------------------------------------------

Outcome solver_guarantees() {
    const std::array<Coord, 10> ns{2, 3, 4, 5, 6, 7, 9, 10, 11, 13};
    std::size_t solved = 0;
    for (Coord n : ns) {
        const auto un = static_cast<std::uint64_t>(n);
        const auto threshold = static_cast<std::size_t>(4 * n - 3);
        for (std::size_t t = 0; t < 1000; ++t) {
            {
                SplitMix64 rng{derive_seed(kMasterSeed, {40, un, t})};
                std::vector<std::int64_t> values;
                for (Coord i = 0; i < 2 * n - 1; ++i)
                    values.push_back(static_cast<std::int64_t>(rng.next() % 10000));
                const auto c = egz_solve(values, n);
                const auto again = egz_solve(values, n);
                if (!c || !again || c->indices != again->indices)
                    return fail("egz not-found or nondeterministic at n=" + std::to_string(n) +
                                " t=" + std::to_string(t));
                std::int64_t sum = 0;
                for (std::size_t i : c->indices) sum += values[i];
                if (c->indices.size() != static_cast<std::size_t>(n) || sum % n != 0)
                    return fail("egz certificate invalid at n=" + std::to_string(n));
                ++solved;
            }
            {
                const auto seed = derive_seed(kMasterSeed, {41, un, t});
                const auto X = random_family(n, 2, threshold, seed);
                const auto direct = kemnitz_solve(X);
                const auto direct2 = kemnitz_solve(X);
                if (!direct || !direct2 || direct->indices != direct2->indices)
                    return fail("kemnitz not-found or nondeterministic at n=" +
                                std::to_string(n) + " seed=" + std::to_string(seed));
                if (!verify_certificate(X, n, *direct))
                    return fail("kemnitz certificate failed verification at n=" +
                                std::to_string(n) + " seed=" + std::to_string(seed));
                const auto composed = compose_solve(X);
                const auto composed2 = compose_solve(X);
                if (!composed || !composed2 || composed->indices != composed2->indices)
                    return fail("compose not-found or nondeterministic at n=" +
                                std::to_string(n) + " seed=" + std::to_string(seed));
                if (!verify_certificate(X, n, *composed))
                    return fail("compose certificate failed verification at n=" +
                                std::to_string(n) + " seed=" + std::to_string(seed));
                solved += 2;
            }
        }
    }
    return Outcome{true, std::to_string(solved) + " instances solved, verified, deterministic"};
}

// --- criterion 8: Lucas coefficients -----------------------------------------

Outcome lucas_coefficients() {
    std::size_t primes = 0;
    for (std::uint64_t p = 3; p <= 10000; p += 2) {
        if (!is_odd_prime(p)) continue;
        const auto up = static_cast<std::uint32_t>(p);
        const bool ok = lucas_binomial_mod_p(4 * p - 3, 3 * p - 3, up) == 3 % p &&
                        lucas_binomial_mod_p(3 * p - 2, 2 * p - 2, up) == 2 % p &&
                        lucas_binomial_mod_p(3 * p - 3, 2 * p - 3, up) == 2 % p &&
                        lucas_binomial_mod_p(2 * p - 2, p - 2, up) == 1 &&
                        lucas_binomial_mod_p(2 * p - 3, p - 3, up) == 1;
        if (!ok) return fail("coefficient tuple wrong at p=" + std::to_string(p));
        ++primes;
    }
    return Outcome{true, std::to_string(primes) +
                             " primes, all five reductions congruent to (3,2,2,1,1)"};
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        Outcome (*run)();
    };
    const std::vector<Criterion> criteria{
        {1, "identity suite (p in {3,5,7,11,13}, 200 families per identity per size class)",
         identity_suite},
        {2, "oracle equivalence (500 families <= 18 points, all j, entrywise mod-p)",
         oracle_equivalence},
        {3, "chi double counting (p in {3,5}, 100 families each, p=3 vs enumeration)",
         chi_double_counting},
        {4, "Chevalley-Warning (300 random systems + 50 exact class decompositions)",
         chevalley_warning},
        {5, "small-case f values (f(2,2), f(3,2), f(n,1) for n in {2,3,4,5})", small_case_f},
        {6, "lower bound (square configuration zero-sum-free for n <= 12)", lower_bound},
        {7, "solver guarantees (1000 instances per n, threshold sizes, both modes)",
         solver_guarantees},
        {8, "Lucas coefficients (all odd primes p <= 10^4)", lucas_coefficients},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = Outcome{false, std::string("exception: ") + e.what()};
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title
                  << " -- " << outcome.detail << " [" << ms << " ms]" << std::endl;
        if (!outcome.pass) ++failures;
    }
    if (failures != 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all 8 criteria passed" << std::endl;
    return 0;
}
