#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "chevalley.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "residue.hpp"

namespace zerosum {

namespace detail {

inline std::string at_line(std::size_t line, const std::string& what) {
    return "line " + std::to_string(line) + ": " + what;
}

inline std::int64_t parse_int(std::string_view tok, std::size_t line) {
    std::int64_t v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw parse_error(at_line(line, "expected an integer, got '" + std::string(tok) + "'"));
    return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

/// Parse a "key=value" token, returning the value.
inline std::int64_t parse_keyed(std::string_view tok, std::string_view key, std::size_t line) {
    if (tok.substr(0, key.size()) != key || tok.size() <= key.size() || tok[key.size()] != '=')
        throw parse_error(at_line(line, "expected '" + std::string(key) + "=<integer>', got '" +
                                            std::string(tok) + "'"));
    return parse_int(tok.substr(key.size() + 1), line);
}

} // namespace detail

/// Point-family text format: a header line `n=<modulus> k=<dimension>`, then
/// one point per line as k comma-separated integers. Arbitrary integers are
/// accepted and reduced mod n on ingestion. Blank lines are skipped.
inline PointFamily read_family(std::istream& in) {
    std::string raw;
    std::size_t line = 0;
    std::string_view header;
    while (std::getline(in, raw)) {
        ++line;
        header = detail::trim(raw);
        if (!header.empty()) break;
        header = {};
    }
    if (header.empty()) throw parse_error("line 1: missing 'n=<modulus> k=<dimension>' header");

    std::vector<std::string_view> toks;
    for (auto t : detail::split(header, ' '))
        if (!detail::trim(t).empty()) toks.push_back(detail::trim(t));
    if (toks.size() != 2)
        throw parse_error(detail::at_line(line, "header must be 'n=<modulus> k=<dimension>'"));
    const std::int64_t n = detail::parse_keyed(toks[0], "n", line);
    const std::int64_t k = detail::parse_keyed(toks[1], "k", line);
    if (n < 2) throw parse_error(detail::at_line(line, "modulus must be at least 2"));
    if (k < 1) throw parse_error(detail::at_line(line, "dimension must be at least 1"));

    PointFamily X = make_family(n, static_cast<std::size_t>(k));
    while (std::getline(in, raw)) {
        ++line;
        const auto body = detail::trim(raw);
        if (body.empty()) continue;
        const auto parts = detail::split(body, ',');
        if (parts.size() != static_cast<std::size_t>(k))
            throw parse_error(detail::at_line(line, "expected " + std::to_string(k) +
                                                        " comma-separated integers"));
        std::vector<Coord> coords;
        coords.reserve(parts.size());
        for (auto part : parts) coords.push_back(detail::parse_int(detail::trim(part), line));
        append_raw(X, coords);
    }
    return X;
}

inline PointFamily read_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open point-family file '" + path + "'");
    try {
        return read_family(in);
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

inline void write_family(std::ostream& out, const PointFamily& X) {
    out << "n=" << X.n << " k=" << X.k << "\n";
    for (const auto& pt : X.points) {
        for (std::size_t i = 0; i < pt.k(); ++i) {
            if (i != 0) out << ",";
            out << pt.coords[i];
        }
        out << "\n";
    }
}

/// Polynomial-system text format: a header line `p=<prime> nvars=<n>`, then
/// one polynomial per line as space-separated `coeff:e1,e2,...,en` monomials.
/// Coefficients are reduced mod p on ingestion.
inline PolynomialSystem read_system(std::istream& in) {
    std::string raw;
    std::size_t line = 0;
    std::string_view header;
    while (std::getline(in, raw)) {
        ++line;
        header = detail::trim(raw);
        if (!header.empty()) break;
        header = {};
    }
    if (header.empty()) throw parse_error("line 1: missing 'p=<prime> nvars=<n>' header");

    std::vector<std::string_view> toks;
    for (auto t : detail::split(header, ' '))
        if (!detail::trim(t).empty()) toks.push_back(detail::trim(t));
    if (toks.size() != 2)
        throw parse_error(detail::at_line(line, "header must be 'p=<prime> nvars=<n>'"));
    const std::int64_t p = detail::parse_keyed(toks[0], "p", line);
    const std::int64_t nv = detail::parse_keyed(toks[1], "nvars", line);
    if (!is_odd_prime(static_cast<std::uint64_t>(p > 0 ? p : 0)))
        throw parse_error(detail::at_line(line, "p must be an odd prime"));
    if (nv < 1) throw parse_error(detail::at_line(line, "nvars must be at least 1"));

    std::vector<SparsePolynomial> polys;
    while (std::getline(in, raw)) {
        ++line;
        const auto body = detail::trim(raw);
        if (body.empty()) continue;
        SparsePolynomial q;
        for (auto tok : detail::split(body, ' ')) {
            tok = detail::trim(tok);
            if (tok.empty()) continue;
            const auto colon = tok.find(':');
            if (colon == std::string_view::npos)
                throw parse_error(
                    detail::at_line(line, "monomial must be 'coeff:e1,e2,...', got '" +
                                              std::string(tok) + "'"));
            Monomial m;
            const std::int64_t c = detail::parse_int(tok.substr(0, colon), line);
            m.coeff = canonical_residue(c, p);
            const auto exps = detail::split(tok.substr(colon + 1), ',');
            if (exps.size() != static_cast<std::size_t>(nv))
                throw parse_error(detail::at_line(line, "expected " + std::to_string(nv) +
                                                            " exponents"));
            for (auto e : exps) {
                const std::int64_t v = detail::parse_int(detail::trim(e), line);
                if (v < 0) throw parse_error(detail::at_line(line, "exponents must be >= 0"));
                m.exponents.push_back(static_cast<std::uint32_t>(v));
            }
            q.monomials.push_back(std::move(m));
        }
        polys.push_back(std::move(q));
    }
    return make_system(p, static_cast<std::uint32_t>(nv), std::move(polys));
}

inline PolynomialSystem read_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open polynomial-system file '" + path + "'");
    try {
        return read_system(in);
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

/// TSV dump of a count table: one `j <tab> g <tab> count` row per entry,
/// where g is the mixed-radix code of the sum residue.
inline void dump_counts_tsv(std::ostream& out, const CountTable& t) {
    out << "j\tg\tcount\n";
    for (std::size_t j = 0; j < t.counts.size(); ++j)
        for (std::size_t g = 0; g < t.counts[j].size(); ++g)
            out << j << "\t" << g << "\t" << t.counts[j][g].str() << "\n";
}

} // namespace zerosum
