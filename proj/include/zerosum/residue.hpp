#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace zerosum {

using Coord = std::int64_t;

/// An element of Z_n^k: k coordinates, each held as the canonical
/// representative in [0, n).
struct ResidueVec {
    std::vector<Coord> coords;
    Coord n = 0;

    std::size_t k() const { return coords.size(); }

    bool is_zero() const {
        for (Coord c : coords)
            if (c != 0) return false;
        return true;
    }

    bool operator==(const ResidueVec&) const = default;
};

/// Coordinatewise sums are ResidueVec values reduced to canonical form.
using GroupSum = ResidueVec;

inline Coord reduce_coord(Coord c, Coord n) {
    Coord r = c % n;
    return r < 0 ? r + n : r;
}

/// Reduce a raw integer point into Z_n^k.
inline ResidueVec reduce_point(std::span<const Coord> raw, Coord n) {
    if (n < 2)
        throw invalid_modulus_error("reduce_point: modulus must be at least 2, got " +
                                    std::to_string(n));
    if (raw.empty()) throw invalid_input_error("reduce_point: point has no coordinates");
    ResidueVec v;
    v.n = n;
    v.coords.reserve(raw.size());
    for (Coord c : raw) v.coords.push_back(reduce_coord(c, n));
    return v;
}

inline ResidueVec reduce_point(std::initializer_list<Coord> raw, Coord n) {
    return reduce_point(std::span<const Coord>(raw.begin(), raw.size()), n);
}

/// An indexed sequence of points sharing one modulus and dimension.
///
/// Indices are identities: repeated residues are distinct members, and a
/// "subset" always means a subset of indices. This is what makes families
/// multisets of residues.
struct PointFamily {
    Coord n = 0;
    std::size_t k = 0;
    std::vector<ResidueVec> points;

    std::size_t size() const { return points.size(); }
};

inline PointFamily make_family(Coord n, std::size_t k) {
    if (n < 2)
        throw invalid_modulus_error("make_family: modulus must be at least 2, got " +
                                    std::to_string(n));
    if (k < 1) throw invalid_input_error("make_family: dimension must be at least 1");
    return PointFamily{n, k, {}};
}

inline void append_raw(PointFamily& X, std::span<const Coord> raw) {
    if (raw.size() != X.k)
        throw invalid_input_error("append_raw: expected " + std::to_string(X.k) +
                                  " coordinates, got " + std::to_string(raw.size()));
    X.points.push_back(reduce_point(raw, X.n));
}

inline void append_raw(PointFamily& X, std::initializer_list<Coord> raw) {
    append_raw(X, std::span<const Coord>(raw.begin(), raw.size()));
}

inline void append_point(PointFamily& X, const ResidueVec& v) {
    if (v.n != X.n || v.k() != X.k)
        throw invalid_input_error("append_point: point modulus/dimension does not match family");
    X.points.push_back(v);
}

inline PointFamily family_from_rows(Coord n, std::size_t k,
                                    const std::vector<std::vector<Coord>>& rows) {
    PointFamily X = make_family(n, k);
    for (const auto& row : rows) append_raw(X, row);
    return X;
}

/// Coordinatewise sum of all points, reduced mod n. The empty family sums to
/// the zero vector.
inline GroupSum family_sum(const PointFamily& X) {
    ResidueVec s;
    s.n = X.n;
    s.coords.assign(X.k, 0);
    for (const auto& pt : X.points)
        for (std::size_t i = 0; i < X.k; ++i) {
            s.coords[i] += pt.coords[i];
            if (s.coords[i] >= X.n) s.coords[i] -= X.n;
        }
    return s;
}

/// |Z_n^k| as a 64-bit count; refuses groups whose order does not fit.
inline std::uint64_t group_order(Coord n, std::size_t k) {
    std::uint64_t acc = 1;
    const auto un = static_cast<std::uint64_t>(n);
    for (std::size_t i = 0; i < k; ++i) {
        if (acc > (std::uint64_t{1} << 62) / un)
            throw resource_limit_error("group Z_" + std::to_string(n) + "^" + std::to_string(k) +
                                       " is too large to index");
        acc *= un;
    }
    return acc;
}

/// Mixed-radix code of a vector: code = sum_i coords[i] * n^i. This encoding
/// is the column index used by count tables and their file dumps.
inline std::uint64_t encode_point(const ResidueVec& v) {
    std::uint64_t code = 0;
    std::uint64_t place = 1;
    for (std::size_t i = 0; i < v.k(); ++i) {
        code += place * static_cast<std::uint64_t>(v.coords[i]);
        place *= static_cast<std::uint64_t>(v.n);
    }
    return code;
}

inline ResidueVec decode_point(std::uint64_t code, Coord n, std::size_t k) {
    ResidueVec v;
    v.n = n;
    v.coords.assign(k, 0);
    const auto un = static_cast<std::uint64_t>(n);
    for (std::size_t i = 0; i < k; ++i) {
        v.coords[i] = static_cast<Coord>(code % un);
        code /= un;
    }
    return v;
}

/// Table of the translation g -> g + x on mixed-radix codes.
inline std::vector<std::uint32_t> add_code_table(const ResidueVec& x) {
    const auto order = group_order(x.n, x.k());
    if (order > (std::uint64_t{1} << 31))
        throw resource_limit_error("add_code_table: group too large for a dense table");
    const auto G = static_cast<std::size_t>(order);
    std::vector<std::uint32_t> out(G);
    std::vector<Coord> c(x.k(), 0); // odometer over all codes, low coordinate first
    for (std::size_t g = 0; g < G; ++g) {
        std::uint64_t code = 0;
        std::uint64_t place = 1;
        for (std::size_t i = 0; i < x.k(); ++i) {
            Coord t = c[i] + x.coords[i];
            if (t >= x.n) t -= x.n;
            code += place * static_cast<std::uint64_t>(t);
            place *= static_cast<std::uint64_t>(x.n);
        }
        out[g] = static_cast<std::uint32_t>(code);
        for (std::size_t i = 0; i < x.k(); ++i) {
            if (++c[i] < x.n) break;
            c[i] = 0;
        }
    }
    return out;
}

inline ResidueVec negate_point(const ResidueVec& x) {
    ResidueVec v = x;
    for (auto& c : v.coords) c = c == 0 ? 0 : x.n - c;
    return v;
}

/// The family with the same points read modulo a divisor m of n (or any
/// other modulus >= 2; coordinates are re-reduced).
inline PointFamily reduce_family(const PointFamily& X, Coord m) {
    PointFamily Y = make_family(m, X.k);
    Y.points.reserve(X.size());
    for (const auto& pt : X.points) Y.points.push_back(reduce_point(pt.coords, m));
    return Y;
}

} // namespace zerosum
