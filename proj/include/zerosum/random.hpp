#pragma once

#include <cstdint>
#include <initializer_list>

#include "errors.hpp"
#include "extremal.hpp"
#include "residue.hpp"

namespace zerosum {

/// SplitMix64 (Steele, Lea, Flood 2014). The output sequence for a given
/// seed is part of this library's reproducibility contract: every random
/// family is a pure function of its (seed, parameters) tuple, and the same
/// tuple must regenerate the same family on any platform.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Value in [0, bound); takes next() modulo bound.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Fold a path of indices into a master seed. Used by batch drivers so that
/// (master seed, instance coordinates) pins every generated instance.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = master;
    for (std::uint64_t v : path) h = mix64(h + 0x9E3779B97F4A7C15ull * (v + 1));
    return h;
}

enum class FamilyMode {
    uniform,
    near_extremal,
    zero_sum_conditioned,
};

/// Deterministic pseudo-random family of `size` points in Z_n^k.
///
/// uniform: every coordinate is an independent draw, next() mod n.
/// zero_sum_conditioned: a uniform family whose last point is replaced by
///   the residue balancing the rest, so the family sum is zero.
/// near_extremal: the unit-square configuration (k = 2 only), truncated or
///   padded with uniform random points to the requested size.
inline PointFamily random_family(Coord n, std::size_t k, std::size_t size, std::uint64_t seed,
                                 FamilyMode mode = FamilyMode::uniform) {
    PointFamily X = make_family(n, k);
    SplitMix64 rng{seed};
    const auto un = static_cast<std::uint64_t>(n);

    auto draw_point = [&] {
        ResidueVec v;
        v.n = n;
        v.coords.reserve(k);
        for (std::size_t i = 0; i < k; ++i) v.coords.push_back(static_cast<Coord>(rng.below(un)));
        return v;
    };

    switch (mode) {
    case FamilyMode::uniform:
        for (std::size_t i = 0; i < size; ++i) X.points.push_back(draw_point());
        break;
    case FamilyMode::zero_sum_conditioned: {
        for (std::size_t i = 0; i < size; ++i) X.points.push_back(draw_point());
        if (size > 0) {
            ResidueVec balance;
            balance.n = n;
            balance.coords.assign(k, 0);
            for (std::size_t i = 0; i + 1 < size; ++i)
                for (std::size_t c = 0; c < k; ++c) {
                    balance.coords[c] += X.points[i].coords[c];
                    if (balance.coords[c] >= n) balance.coords[c] -= n;
                }
            for (auto& c : balance.coords) c = c == 0 ? 0 : n - c;
            X.points.back() = balance;
        }
        break;
    }
    case FamilyMode::near_extremal: {
        if (k != 2)
            throw invalid_input_error("random_family: near-extremal families are planar (k = 2)");
        const PointFamily base = extremal_config(n);
        for (std::size_t i = 0; i < size && i < base.size(); ++i)
            X.points.push_back(base.points[i]);
        while (X.size() < size) X.points.push_back(draw_point());
        break;
    }
    }
    return X;
}

} // namespace zerosum
