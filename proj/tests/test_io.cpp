#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "zerosum/chevalley.hpp"
#include "zerosum/io.hpp"
#include "zerosum/random.hpp"

using namespace zerosum;

TEST_CASE("family files round-trip") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto X = random_family(2 + seed % 9, 1 + seed % 3, seed % 12, derive_seed(83, {seed}));
        std::stringstream s;
        write_family(s, X);
        const auto Y = read_family(s);
        REQUIRE(Y.n == X.n);
        REQUIRE(Y.k == X.k);
        REQUIRE(Y.points == X.points);
    }
}

TEST_CASE("family ingestion reduces arbitrary integers") {
    std::stringstream s("n=5 k=2\n7,-3\n-1,12\n");
    const auto X = read_family(s);
    REQUIRE(X.size() == 2);
    CHECK(X.points[0].coords == std::vector<Coord>{2, 2});
    CHECK(X.points[1].coords == std::vector<Coord>{4, 2});
}

TEST_CASE("family parse errors carry line numbers") {
    SECTION("bad header") {
        std::stringstream s("k=2 n=5\n");
        CHECK_THROWS_MATCHES(read_family(s), parse_error,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("line 1")));
    }
    SECTION("wrong arity") {
        std::stringstream s("n=5 k=2\n1,2\n3\n");
        CHECK_THROWS_MATCHES(read_family(s), parse_error,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("line 3")));
    }
    SECTION("garbage token") {
        std::stringstream s("n=5 k=2\n1,x\n");
        CHECK_THROWS_MATCHES(read_family(s), parse_error,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("line 2")));
    }
    SECTION("bad modulus") {
        std::stringstream s("n=1 k=2\n");
        CHECK_THROWS_AS(read_family(s), parse_error);
    }
    SECTION("empty input") {
        std::stringstream s("");
        CHECK_THROWS_AS(read_family(s), parse_error);
    }
}

TEST_CASE("polynomial system files") {
    SECTION("a line over F_5") {
        std::stringstream s("p=5 nvars=2\n1:1,0 1:0,1\n");
        const auto sys = read_system(s);
        REQUIRE(sys.p == 5);
        REQUIRE(sys.nvars == 2);
        REQUIRE(sys.polys.size() == 1);
        CHECK(sys.polys[0].monomials.size() == 2);
        CHECK(count_common_zeros(sys).omega == 5);
    }
    SECTION("coefficients are reduced mod p") {
        std::stringstream s("p=5 nvars=1\n7:1 -1:0\n");
        const auto sys = read_system(s);
        REQUIRE(sys.polys[0].monomials.size() == 2);
        for (const auto& m : sys.polys[0].monomials) CHECK(m.coeff < 5);
    }
    SECTION("wrong exponent count") {
        std::stringstream s("p=5 nvars=3\n1:1,0\n");
        CHECK_THROWS_MATCHES(read_system(s), parse_error,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("line 2")));
    }
    SECTION("composite p is rejected") {
        std::stringstream s("p=9 nvars=2\n");
        CHECK_THROWS_AS(read_system(s), parse_error);
    }
}

TEST_CASE("count table TSV dump") {
    const auto X = family_from_rows(3, 1, {{1}, {2}});
    std::stringstream s;
    dump_counts_tsv(s, count_exact(X));
    std::string line;
    std::getline(s, line);
    CHECK(line == "j\tg\tcount");
    std::getline(s, line);
    CHECK(line == "0\t0\t1"); // empty subset at the zero element
    // j=1: one subset at g=1 and one at g=2; j=2: the pair sums to 0
    std::string rest((std::istreambuf_iterator<char>(s)), std::istreambuf_iterator<char>());
    CHECK(rest == "0\t1\t0\n0\t2\t0\n1\t0\t0\n1\t1\t1\n1\t2\t1\n2\t0\t1\n2\t1\t0\n2\t2\t0\n");
}
