#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "speclab/graph.hpp"
#include "speclab/graph6.hpp"
#include "speclab/isomorphism.hpp"

using namespace speclab;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("basic constructions") {
    SECTION("cycle") {
        const Graph c5 = cycle_graph(5);
        REQUIRE(c5.order() == 5);
        REQUIRE(c5.size() == 5);
        for (int v = 0; v < 5; ++v) REQUIRE(c5.degree(v) == 2);
        REQUIRE_THROWS_AS(cycle_graph(2), std::invalid_argument);
    }
    SECTION("complete bipartite") {
        const Graph k23 = complete_bipartite(2, 3);
        REQUIRE(k23.order() == 5);
        REQUIRE(k23.size() == 6);
        REQUIRE_THROWS_AS(complete_bipartite(0, 3), std::invalid_argument);
    }
    SECTION("degenerate path") {
        const Graph p1 = path_graph(1);
        REQUIRE(p1.order() == 1);
        REQUIRE(p1.size() == 0);
        REQUIRE_THROWS_AS(path_graph(0), std::invalid_argument);
    }
    SECTION("complete") {
        REQUIRE(complete_graph(5).size() == 10);
    }
}

TEST_CASE("union and join") {
    const Graph s52 = graph_join(complete_graph(2), Graph(3));
    REQUIRE(s52.order() == 5);
    REQUIRE(s52.size() == 7);
    REQUIRE(split_graph(5, 2) == s52);

    const Graph p2k1 = disjoint_union(path_graph(2), Graph(1));
    REQUIRE(p2k1.order() == 3);
    REQUIRE(p2k1.size() == 1);
    REQUIRE(p2k1.degree(2) == 0);

    REQUIRE(graph_join(Graph(1), Graph(1)) == complete_graph(2));
}

TEST_CASE("blow-up") {
    const Graph base = disjoint_union(path_graph(2), Graph(1));
    SECTION("K_{2,3} plus an isolated vertex") {
        const Graph g = blow_up(base, {2, 3, 1});
        REQUIRE(g.order() == 6);
        REQUIRE(g.size() == 6);
        REQUIRE(g.degree(5) == 0);
        REQUIRE(is_isomorphic(g.induced({0, 1, 2, 3, 4}), complete_bipartite(2, 3)));
    }
    SECTION("all-ones blow-up is the identity") {
        REQUIRE(blow_up(base, {1, 1, 1}) == base);
    }
    SECTION("empty classes are allowed") {
        const Graph g = blow_up(base, {2, 3, 0});
        REQUIRE(is_isomorphic(g, complete_bipartite(2, 3)));
    }
    SECTION("size vector length must match") {
        REQUIRE_THROWS_AS(blow_up(base, {1, 2}), std::invalid_argument);
    }
}

TEST_CASE("t-shaped trees") {
    const Graph t112 = t_tree(1, 1, 2);
    REQUIRE(t112.order() == 5);
    REQUIRE(t112.size() == 4);
    auto deg = t112.degrees();
    std::sort(deg.begin(), deg.end(), std::greater<int>());
    REQUIRE(deg == std::vector<int>{3, 2, 1, 1, 1});

    REQUIRE(is_isomorphic(t_tree(1, 1, 1), complete_bipartite(1, 3)));
    REQUIRE_THROWS_AS(t_tree(2, 1, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(t_tree(0, 1, 1), std::invalid_argument);
}

TEST_CASE("rk_bipartite") {
    SECTION("counts") {
        for (int k = 1; k <= 4; ++k)
            for (int s = 2; s <= 6; ++s)
                for (int t = s; t <= 6; ++t) {
                    const Graph g = rk_bipartite(k, s, t);
                    REQUIRE(g.order() == s + t + 2 * k - 1);
                    REQUIRE(g.size() == static_cast<long long>(s) * t - 1 + 2 * k);
                }
    }
    SECTION("R_1 is an edge subdivision of K_{s,t}") {
        for (int s = 2; s <= 4; ++s)
            for (int t = s; t <= 4; ++t) {
                // subdivide the edge (0, s) of K_{s,t} by hand
                Graph sub(s + t + 1);
                for (int i = 0; i < s; ++i)
                    for (int j = s; j < s + t; ++j)
                        if (!(i == 0 && j == s)) sub.add_edge(i, j);
                sub.add_edge(0, s + t);
                sub.add_edge(s + t, s);
                REQUIRE(is_isomorphic(rk_bipartite(1, s, t), sub));
            }
    }
    SECTION("R_1(K_{2,2}) is the five-cycle") {
        REQUIRE(is_isomorphic(rk_bipartite(1, 2, 2), cycle_graph(5)));
    }
    SECTION("domain") {
        REQUIRE_THROWS_AS(rk_bipartite(1, 1, 3), std::invalid_argument);
        REQUIRE_THROWS_AS(rk_bipartite(0, 2, 2), std::invalid_argument);
    }
}

TEST_CASE("graph structure helpers") {
    std::mt19937 rng(42);
    const Graph g = random_graph(rng, 10);
    for (int j = 1; j < 10; ++j)
        for (int i = 0; i < j; ++i) REQUIRE(g.has_edge(i, j) == g.has_edge(j, i));
    for (int v = 0; v < 10; ++v) REQUIRE_FALSE(g.has_edge(v, v));
    REQUIRE_THROWS_AS(Graph(3).add_edge(0, 0), std::invalid_argument);

    const Graph two = disjoint_union(cycle_graph(3), path_graph(2));
    REQUIRE(two.components().size() == 2);
    REQUIRE_FALSE(two.is_connected());
    REQUIRE(cycle_graph(6).is_connected());

    const Graph trunc = two.without_last_vertex();
    REQUIRE(trunc.order() == 4);
    REQUIRE(trunc.size() == 3);
}

TEST_CASE("graph6 round trip") {
    SECTION("known encodings") {
        REQUIRE(to_graph6(complete_graph(5)) == "D~{");
        REQUIRE(from_graph6("D~{") == complete_graph(5));
        REQUIRE(to_graph6(complete_graph(1)) == "@");
        REQUIRE(to_graph6(Graph(0)) == "?");
        REQUIRE(from_graph6("?").order() == 0);
    }
    SECTION("random graphs round trip") {
        std::mt19937 rng(1234);
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = static_cast<int>(rng() % 31);
            const Graph g = random_graph(rng, n);
            REQUIRE(from_graph6(to_graph6(g)) == g);
        }
    }
    SECTION("large-order header") {
        const Graph g = path_graph(100);
        REQUIRE(from_graph6(to_graph6(g)) == g);
    }
    SECTION("malformed input carries a byte offset") {
        try {
            from_graph6("D~");  // truncated K_5
            FAIL("expected a parse error");
        } catch (const Graph6ParseError& e) {
            REQUIRE(e.byte_offset == 2);
        }
        REQUIRE_THROWS_AS(from_graph6("D~{X"), Graph6ParseError);  // trailing bytes
        REQUIRE_THROWS_AS(from_graph6("B\x1f"), Graph6ParseError); // byte below 63
        REQUIRE_THROWS_AS(from_graph6("B"), Graph6ParseError);     // missing bits
    }
    SECTION("padding must be zero") {
        // C_3 on 3 vertices uses 3 bits; set a padding bit by hand
        // (bytes carry value+63, so flip a bit of the 6-bit payload).
        std::string enc = to_graph6(cycle_graph(3));
        enc.back() = static_cast<char>((((enc.back() - 63) | 1) + 63));
        REQUIRE_THROWS_AS(from_graph6(enc), Graph6ParseError);
    }
}
