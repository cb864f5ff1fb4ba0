#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "kended/corpus.hpp"
#include "kended/degree_sums.hpp"
#include "kended/errors.hpp"
#include "kended/families.hpp"
#include "kended/graph.hpp"
#include "kended/graph6.hpp"
#include "oracle/oracle.hpp"

using namespace kended;

namespace {

// Graph whose upper-triangle pairs in column order follow the bits of mask,
// most significant first.
Graph from_pair_mask(int n, std::uint64_t mask) {
    Graph g(n);
    const int pairs = n * (n - 1) / 2;
    int index = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++index) {
            if (mask >> (pairs - 1 - index) & 1) g.add_edge(u, v);
        }
    }
    return g;
}

} // namespace

TEST_CASE("graph stores a symmetric loopless edge set") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    g.add_edge(1, 0);
    CHECK(g.size() == 2);
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 1));
    CHECK(g.degree(1) == 2);
    CHECK(g.min_degree() == 0);
    CHECK_FALSE(g.is_connected());
    CHECK_THROWS_AS(g.add_edge(3, 3), ParameterError);
    CHECK_THROWS_AS(g.add_edge(0, 4), ParameterError);
    CHECK_THROWS_AS(Graph(65), SizeError);
    g.add_edge(2, 3);
    CHECK(g.is_connected());
    CHECK(g.edges() == std::vector<Edge>{Edge(0, 1), Edge(1, 2), Edge(2, 3)});
}

TEST_CASE("edges are listed in graph6 column order") {
    const Graph k4 = build_family(FamilySpec::complete(4));
    const std::vector<Edge> expected{Edge(0, 1), Edge(0, 2), Edge(1, 2),
                                     Edge(0, 3), Edge(1, 3), Edge(2, 3)};
    CHECK(k4.edges() == expected);
}

TEST_CASE("lexicographic vertex-set order compares sorted member lists") {
    CHECK(lex_less(0b011, 0b101));   // {0,1} < {0,2}
    CHECK(lex_less(0b001, 0b011));   // prefix first
    CHECK_FALSE(lex_less(0b110, 0b011));
    CHECK_FALSE(lex_less(0b101, 0b101));
    CHECK(lex_less(0b0011, 0b0100));  // {0,1} < {2}
}

TEST_CASE("family constructors") {
    SUBCASE("g1(2,2) has a universal centre over three disjoint edges") {
        const Graph g = build_family(FamilySpec::g1(2, 2));
        REQUIRE(g.order() == 7);
        CHECK(g.degree(6) == 6);
        for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 2);
        CHECK(g.size() == 9);
    }
    SUBCASE("complete(1) is a single vertex") {
        const Graph g = build_family(FamilySpec::complete(1));
        CHECK(g.order() == 1);
        CHECK(g.size() == 0);
    }
    SUBCASE("krr(3) is K_{3,3}") {
        const Graph g = build_family(FamilySpec::krr(3));
        CHECK(g.order() == 6);
        CHECK(g.size() == 9);
        CHECK(g.is_independent(0b000111));
        CHECK(g.is_independent(0b111000));
    }
    SUBCASE("orders of the extremal families") {
        for (int k = 1; k <= 4; ++k) {
            for (int lambda = 1; lambda <= 4; ++lambda) {
                CHECK(build_family(FamilySpec::g1(k, lambda)).order() == (k + 1) * lambda + 1);
                if (lambda >= 2) {
                    CHECK(build_family(FamilySpec::g2(k, lambda)).order() == (k + 1) * (lambda - 1) + 1);
                }
            }
            if (k >= 2) CHECK(build_family(FamilySpec::g3(k)).order() == (k + 2) * (k - 1) + 2);
        }
    }
    SUBCASE("composite families") {
        const Graph g = build_family(
            FamilySpec::join(FamilySpec::disjoint_union(FamilySpec::complete(2), FamilySpec::complete(1)),
                             FamilySpec::complete(1)));
        CHECK(g.order() == 4);
        CHECK(g.size() == 4);
        CHECK(g.degree(3) == 3);
        CHECK(build_family(FamilySpec::cycle(5)).size() == 5);
        CHECK(build_family(FamilySpec::path(5)).size() == 4);
        CHECK(build_family(FamilySpec::star(4)).degree(0) == 4);
        CHECK(build_family(FamilySpec::complete_bipartite(2, 3)).size() == 6);
    }
    SUBCASE("malformed parameters are rejected") {
        CHECK_THROWS_AS(build_family(FamilySpec::g2(2, 1)), ParameterError);
        CHECK_THROWS_AS(build_family(FamilySpec::g3(1)), ParameterError);
        CHECK_THROWS_AS(build_family(FamilySpec::g1(0, 2)), ParameterError);
        CHECK_THROWS_AS(build_family(FamilySpec::cycle(2)), ParameterError);
        CHECK_THROWS_AS(build_family(FamilySpec::complete(0)), ParameterError);
    }
    CHECK(describe(FamilySpec::g1(2, 2)) == "g1(k=2,lambda=2)");
}

TEST_CASE("extended counts treat infinity as absorbing and maximal") {
    const ExtendedCount inf = ExtendedCount::infinity();
    CHECK(inf > ExtendedCount(1000000));
    CHECK(inf >= std::int64_t{5});
    CHECK(inf + 7 == inf);
    CHECK(ExtendedCount(3) + 4 == std::int64_t{7});
    CHECK_FALSE(inf == std::int64_t{0});
    CHECK(to_string(inf) == "inf");
    CHECK(to_string(ExtendedCount(12)) == "12");
    CHECK_THROWS(inf.value());
}

TEST_CASE("sigma and independence number on named graphs") {
    const Graph k4 = build_family(FamilySpec::complete(4));
    CHECK(sigma(k4, 2).is_infinite());
    CHECK(independence_number(k4) == 1);
    CHECK(sigma(build_family(FamilySpec::path(3)), 2) == std::int64_t{2});
    CHECK(independence_number(build_family(FamilySpec::cycle(5))) == 2);
    const Graph g1 = build_family(FamilySpec::g1(2, 2));
    CHECK(sigma(g1, 2) == std::int64_t{4});
    CHECK(sigma(g1, 3) == std::int64_t{6});
    CHECK(sigma(g1, 4).is_infinite());
    CHECK(independence_number(g1) == 3);
    CHECK(independence_number(Graph(0)) == 0);
    CHECK_THROWS_AS(sigma(k4, 0), ParameterError);
}

TEST_CASE("sigma agrees with brute force on every connected graph up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        LabeledConnectedGraphs stream(n);
        while (auto g = stream.next()) {
            const int alpha = independence_number(*g);
            REQUIRE(alpha == oracle::alpha(*g));
            CHECK(sigma(*g, 1) == std::int64_t{g->min_degree()});
            std::optional<ExtendedCount> previous;
            for (int m = 1; m <= n + 1; ++m) {
                const ExtendedCount s = sigma(*g, m);
                const long expected = oracle::sigma(*g, m);
                if (expected < 0) {
                    REQUIRE(s.is_infinite());
                    REQUIRE(m > alpha);
                } else {
                    REQUIRE(s == std::int64_t{expected});
                    if (previous) REQUIRE(*previous <= s);
                    previous = s;
                }
            }
        }
    }
}

TEST_CASE("graph6 examples") {
    const Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);
    CHECK(parse_graph6("Bw") == build_family(FamilySpec::complete(3)));
    CHECK(write_graph6(build_family(FamilySpec::complete(3))) == "Bw");
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(write_graph6(Graph(0)) == "?");
    CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 rejects malformed input with the byte offset") {
    auto offset_of = [](std::string_view text) {
        try {
            parse_graph6(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    CHECK(offset_of("B") == 1);        // truncated
    CHECK(offset_of("Bww") == 2);      // trailing byte
    CHECK(offset_of("B\x7f") == 1);    // out of range
    CHECK(offset_of("") == 0);
    CHECK(offset_of("~") == 0);        // long form not supported
    CHECK(offset_of("Bx") == 1);       // nonzero padding bits
    CHECK_THROWS_AS(write_graph6(Graph(63)), SizeError);
}

TEST_CASE("graph6 round trip on every labeled graph up to 5 vertices") {
    for (int n = 0; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            const Graph g = from_pair_mask(n, mask);
            REQUIRE(parse_graph6(write_graph6(g)) == g);
        }
    }
}

TEST_CASE("graph6 round trip on random graphs up to 30 vertices") {
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 1000; ++i) {
        const int n = static_cast<int>(rng() % 31);
        const double p = static_cast<double>(rng() % 100 + 1) / 100.0;
        const Graph g = random_graph(n, p, rng());
        REQUIRE(parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("graph6 corpus lines carry file and line context") {
    std::istringstream in("Bw\n\n@\r\nB\n");
    try {
        read_graph6_lines(in, "corpus.g6");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("corpus.g6:4") != std::string::npos);
    }
    std::istringstream ok("Bw\n\n@\r\n");
    CHECK(read_graph6_lines(ok, "ok").size() == 2);
    CHECK_THROWS_AS(read_graph6_file("/nonexistent/corpus.g6"), Error);
}

TEST_CASE("labeled connected enumeration counts") {
    const std::vector<std::size_t> expected{1, 1, 4, 38, 728, 26704};
    for (int n = 1; n <= 6; ++n) {
        LabeledConnectedGraphs stream(n);
        std::size_t total = 0;
        while (auto g = stream.next()) {
            REQUIRE(g->is_connected());
            ++total;
        }
        CHECK(total == expected[static_cast<std::size_t>(n - 1)]);
    }
    // Brute-force recount by filtering all labeled graphs.
    for (int n = 1; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        std::size_t connected = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            if (from_pair_mask(n, mask).is_connected()) ++connected;
        }
        CHECK(connected == expected[static_cast<std::size_t>(n - 1)]);
    }
    CHECK_THROWS_AS(LabeledConnectedGraphs(8), SizeError);
    CHECK_THROWS_AS(LabeledConnectedGraphs(0), ParameterError);
    CHECK_NOTHROW(LabeledConnectedGraphs(8, 8));
}

TEST_CASE("random connected graphs are deterministic per seed") {
    CHECK(random_connected(2, 1.0, 99) == build_family(FamilySpec::complete(2)));
    CHECK(random_connected(7, 0.4, 5) == random_connected(7, 0.4, 5));
    CHECK(random_connected(6, 0.5, 42).is_connected());
    CHECK_THROWS_AS(random_connected(12, 0.01, 1, 20), SamplingError);
    CHECK_THROWS_AS(random_connected(4, 0.0, 1), ParameterError);
}
