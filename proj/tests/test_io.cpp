#include <catch2/catch_amalgamated.hpp>

#include "nwd/generators.hpp"
#include "nwd/io.hpp"

using namespace nwd;

TEST_CASE("edge list parsing") {
    CHECK(parse_edge_list("0 1\n1 2\n") == make_path(3));
    CHECK(parse_edge_list("p 3 0\n") == Graph(3));
    CHECK(parse_edge_list("") == Graph(0));

    // DIMACS variant, 1-based
    CHECK(parse_edge_list("c comment\np edge 3 2\ne 1 2\ne 2 3\n") == make_path(3));

    CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1\n1 0\n"), ParseError);  // duplicate edge
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("p 2 1\n0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("p 3 7\n0 1\n"), ParseError);  // count mismatch

    try {
        parse_edge_list("0 1\nnope\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("serialize round trip") {
    Rng rng(21);
    for (int it = 0; it < 40; ++it) {
        int n = rng.next_int(0, 15);
        long long m = n < 2 ? 0 : rng.next_below(static_cast<std::uint64_t>(n) * (n - 1) / 2 + 1);
        auto g = make_random_graph(n, m, rng);
        auto text = serialize_edge_list(g);
        CHECK(parse_edge_list(text) == g);
        CHECK(serialize_edge_list(parse_edge_list(text)) == text);
    }
}

TEST_CASE("colors file") {
    auto colors = parse_colors("0 1\n3 0\n", 5);
    CHECK(colors == std::vector<int>{1, kUncolored, kUncolored, 0, kUncolored});
    CHECK_THROWS_AS(parse_colors("9 0\n", 5), ParseError);
    CHECK_THROWS_AS(parse_colors("1 0\n1 0\n", 5), ParseError);
}
