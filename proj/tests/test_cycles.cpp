#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "speclab/cycles.hpp"
#include "speclab/enumerate.hpp"
#include "speclab/graph.hpp"

using namespace speclab;

namespace {

// Independent oracle: enumerate every simple cycle by DFS (each cycle rooted
// at its minimum vertex) and report the set of cycle lengths.
std::set<int> all_cycle_lengths(const Graph& g) {
    const int n = g.order();
    std::set<int> lengths;
    std::vector<int> path;
    std::vector<char> used(n, 0);
    auto dfs = [&](auto&& self, int start) -> void {
        for (int u = start + 1; u < n; ++u) {
            if (used[u] || !g.has_edge(path.back(), u)) continue;
            path.push_back(u);
            used[u] = 1;
            if (path.size() >= 3 && g.has_edge(u, start)) lengths.insert(static_cast<int>(path.size()));
            self(self, start);
            used[u] = 0;
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        dfs(dfs, s);
    }
    return lengths;
}

OddGirth oracle_odd_girth(const Graph& g) {
    for (int len : all_cycle_lengths(g))
        if (len % 2 == 1) return {len};
    return {};
}

bool is_induced_cycle(const Graph& g, const std::vector<int>& cyc) {
    const int len = static_cast<int>(cyc.size());
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if (g.has_edge(cyc[i], cyc[j]) != consecutive) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("odd girth basics") {
    REQUIRE(odd_girth(cycle_graph(5)) == OddGirth{5});
    REQUIRE(odd_girth(complete_bipartite(3, 3)).bipartite());
    REQUIRE(odd_girth(Graph(4)).bipartite());
    REQUIRE(odd_girth(complete_graph(4)) == OddGirth{3});

    // 11-vertex instance, cross-checked by exhaustive cycle enumeration
    const Graph g = rk_bipartite(2, 3, 3);
    REQUIRE(odd_girth(g) == OddGirth{7});
    REQUIRE(oracle_odd_girth(g) == OddGirth{7});
}

TEST_CASE("odd girth of the R_k family") {
    for (int k = 1; k <= 4; ++k)
        for (int s = 2; s <= 6; ++s)
            for (int t = s; t <= 6; ++t)
                REQUIRE(odd_girth(rk_bipartite(k, s, t)) == OddGirth{2 * k + 3});
}

TEST_CASE("forbidden-family membership") {
    REQUIRE(is_forbidden_free(cycle_graph(7), 2));
    REQUIRE_FALSE(is_forbidden_free(cycle_graph(5), 2));
    REQUIRE(is_forbidden_free(cycle_graph(5), 1));
    REQUIRE(is_forbidden_free(blow_up(path_graph(5), {2, 2, 2, 2, 2}), 5));
    REQUIRE_THROWS_AS(is_forbidden_free(Graph(1), 0), std::invalid_argument);

    // once false, false for every larger k
    const EnumOptions opt{2, 10};
    EnumerationCache cache;
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : cache.level(n, 0, opt))
            for (int k = 1; k <= 2; ++k)
                if (!is_forbidden_free(g, k))
                    for (int k2 = k + 1; k2 <= 4; ++k2) REQUIRE_FALSE(is_forbidden_free(g, k2));
}

TEST_CASE("shortest odd cycle extraction") {
    SECTION("the nine-cycle is its own shortest odd cycle") {
        const auto cyc = shortest_odd_cycle(cycle_graph(9));
        REQUIRE(cyc.has_value());
        REQUIRE(*cyc == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});
    }
    SECTION("bipartite graphs have none") {
        REQUIRE_FALSE(shortest_odd_cycle(complete_bipartite(2, 3)).has_value());
    }
    SECTION("subdivided K_{2,3}: a five-cycle through the subdivision vertex") {
        const Graph g = rk_bipartite(1, 2, 3);
        const auto cyc = shortest_odd_cycle(g);
        REQUIRE(cyc.has_value());
        REQUIRE(cyc->size() == 5);
        REQUIRE(std::count(cyc->begin(), cyc->end(), 5) == 1);  // interior path vertex is labeled last
        REQUIRE(is_induced_cycle(g, *cyc));
    }
}

TEST_CASE("odd girth agrees with exhaustive cycle enumeration on n <= 8") {
    const EnumOptions opt{2, 10};
    EnumerationCache cache;
    for (int n = 1; n <= 8; ++n) {
        for (const Graph& g : cache.level(n, 0, opt)) {
            const OddGirth fast = odd_girth(g);
            REQUIRE(fast == oracle_odd_girth(g));
            if (!fast.bipartite()) {
                const auto cyc = shortest_odd_cycle(g);
                REQUIRE(cyc.has_value());
                REQUIRE(static_cast<int>(cyc->size()) == *fast.length);
                REQUIRE(is_induced_cycle(g, *cyc));
            }
        }
    }
}

TEST_CASE("blow-ups with non-empty classes preserve bipartiteness and odd girth") {
    std::mt19937_64 rng(61);
    const std::vector<Graph> bases{cycle_graph(5), cycle_graph(7), path_graph(4),
                                   complete_bipartite(2, 3), disjoint_union(cycle_graph(5), path_graph(2))};
    for (const Graph& base : bases)
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> sizes(base.order());
            for (int& s : sizes) s = 1 + static_cast<int>(rng() % 3);
            REQUIRE(odd_girth(blow_up(base, sizes)) == odd_girth(base));
        }
}

TEST_CASE("subgraph cycle search") {
    REQUIRE(has_cycle_of_length(cycle_graph(5), 5));
    REQUIRE_FALSE(has_cycle_of_length(cycle_graph(5), 3));
    REQUIRE_FALSE(has_cycle_of_length(cycle_graph(5), 4));
    for (int l = 3; l <= 5; ++l) REQUIRE(has_cycle_of_length(complete_graph(5), l));
    REQUIRE_FALSE(has_cycle_of_length(complete_graph(5), 6));
    REQUIRE_FALSE(has_cycle_of_length(path_graph(4), 3));
}
