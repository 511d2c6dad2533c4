#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "repute/graph.hpp"

using namespace repute;

namespace {

DirectedGraph path_abc() {
    return DirectedGraph({1, 2, 3}, {{1, 2}, {2, 3}});
}

DirectedGraph complete3() {
    return DirectedGraph({0, 1, 2}, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
}

}  // namespace

TEST_CASE("construction dedupes and drops self-loops") {
    DirectedGraph g({3, 1, 2, 1}, {{1, 2}, {1, 2}, {2, 2}, {2, 3}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.self_loops_rejected() == 1);
    CHECK(g.duplicate_edges_merged() == 1);
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(2, 1));
    CHECK_THROWS_AS((void)g.index_of(9), UnknownVertex);
}

TEST_CASE("distance on a path graph") {
    const auto g = path_abc();
    CHECK(distance(g, 1, 3).hops == 2);
    CHECK(distance(g, 3, 1).unreachable());
    CHECK(distance(g, 2, 2).hops == 0);
    CHECK_THROWS_AS(distance(g, 1, 99), UnknownVertex);
}

TEST_CASE("diagonal") {
    CHECK(diagonal(complete3()) == 1);
    CHECK(diagonal(path_abc()) == 2);
    CHECK(diagonal(DirectedGraph({1, 2, 3}, {})) == 0);
    CHECK_THROWS_AS(diagonal(DirectedGraph()), EmptyGraph);
}

TEST_CASE("degrees of a star") {
    DirectedGraph g({0, 1, 2, 3, 4}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    const auto deg = degrees(g);
    CHECK(deg[0].in == 0);
    CHECK(deg[0].out == 4);
    CHECK(deg[0].total() == 4);
    for (int leaf = 1; leaf <= 4; ++leaf) {
        CHECK(deg[leaf].in == 1);
        CHECK(deg[leaf].out == 0);
        CHECK(deg[leaf].total() == 1);
    }
    for (const auto& d : degrees(DirectedGraph({1, 2}, {}))) {
        CHECK(d.total() == 0);
    }
}

TEST_CASE("degrees equal dense adjacency-matrix sums") {
    const auto g = oracles::random_graph(9, 0.3, 42);
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v : g.successors(u)) a[u][v] = 1;
    const auto deg = degrees(g);
    for (std::size_t v = 0; v < n; ++v) {
        int row = 0, col = 0;
        for (std::size_t w = 0; w < n; ++w) {
            row += a[v][w];
            col += a[w][v];
        }
        CHECK(deg[v].out == static_cast<std::size_t>(row));
        CHECK(deg[v].in == static_cast<std::size_t>(col));
        CHECK(deg[v].total() == deg[v].in + deg[v].out);
    }
}

TEST_CASE("closeness on a path graph") {
    const auto g = path_abc();
    CHECK(closeness(g, 1) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(closeness(g, 3) == 0.0);
    CHECK(closeness(DirectedGraph({7}, {}), 7) == 0.0);
    CHECK_THROWS_AS(closeness(g, 42), UnknownVertex);
}

TEST_CASE("betweenness trivial cases") {
    CHECK(betweenness(path_abc(), 2) == doctest::Approx(1.0));
    const auto k3 = complete3();
    for (VertexId v : {0, 1, 2}) CHECK(betweenness(k3, v) == 0.0);
}

TEST_CASE("pagerank on a 3-cycle is uniform") {
    DirectedGraph g({0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
    for (double pr : pagerank(g, 0.85, 1e-12, 1000)) {
        CHECK(pr == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
}

TEST_CASE("pagerank with a dangling vertex") {
    // closed form of the 2x2 fixed point with uniform dangling redistribution
    DirectedGraph g({0, 1}, {{0, 1}});
    const auto pr = pagerank(g, 0.85, 1e-14, 10000);
    CHECK(pr[0] == doctest::Approx(0.3509).epsilon(1e-3));
    CHECK(pr[1] == doctest::Approx(0.6491).epsilon(1e-3));
    CHECK(pr[0] + pr[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pagerank errors") {
    CHECK_THROWS_AS(pagerank(DirectedGraph(), 0.85, 1e-10, 100), EmptyGraph);
    DirectedGraph g({0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
    CHECK_THROWS_AS(pagerank(g, 0.85, 1e-15, 1), NonConvergence);
    try {
        pagerank(g, 0.85, 1e-15, 1);
    } catch (const NonConvergence& e) {
        CHECK(e.iterations == 1);
        CHECK(e.residual > 1e-15);
    }
}

TEST_CASE("pagerank fixed point matches truncated power series") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = oracles::random_graph(10, 0.25, 1000 + seed);
        const auto fixed = pagerank(g, 0.85, 1e-13, 5000);
        const auto series = oracles::pagerank_series(g, 0.85, 200);
        double l1 = 0.0;
        for (std::size_t v = 0; v < fixed.size(); ++v)
            l1 += std::abs(fixed[v] - series[v]);
        CHECK(l1 < 1e-8);
    }
}

TEST_CASE("brute-force oracle agreement on random graphs") {
    std::mt19937_64 meta(7);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + meta() % 7;  // up to 8 vertices
        const double p = 0.1 + 0.5 * static_cast<double>(meta() % 8) / 8.0;
        const auto g = oracles::random_graph(n, p, meta());
        const auto dist = oracles::brute_force_distances(g);
        for (std::uint32_t u = 0; u < n; ++u) {
            const auto bfs = bfs_hops(g, u);
            for (std::uint32_t v = 0; v < n; ++v) CHECK(bfs[v] == dist[u][v]);
        }
        CHECK(static_cast<std::int64_t>(diagonal(g)) == oracles::brute_force_diagonal(g));
        const auto close = closeness_all(g);
        const auto close_ref = oracles::brute_force_closeness(g);
        const auto betw = betweenness_all(g);
        const auto betw_ref = oracles::brute_force_betweenness(g);
        for (std::uint32_t v = 0; v < n; ++v) {
            CHECK(close[v] == doctest::Approx(close_ref[v]).epsilon(1e-9));
            CHECK(betw[v] == doctest::Approx(betw_ref[v]).epsilon(1e-9));
        }
    }
}

TEST_CASE("metric invariants on random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = oracles::random_graph(8, 0.3, 5000 + seed);
        const std::size_t n = g.vertex_count();
        std::vector<std::vector<std::int64_t>> d(n);
        for (std::uint32_t u = 0; u < n; ++u) d[u] = bfs_hops(g, u);

        for (std::uint32_t u = 0; u < n; ++u) {
            CHECK(d[u][u] == 0);
            for (std::uint32_t v = 0; v < n; ++v) {
                for (std::uint32_t w = 0; w < n; ++w) {
                    if (d[u][v] >= 0 && d[v][w] >= 0 && d[u][w] >= 0)
                        CHECK(d[u][w] <= d[u][v] + d[v][w]);
                }
            }
        }
        CHECK(diagonal(g) <= n - 1);

        std::size_t out_sum = 0, in_sum = 0;
        for (const auto& deg : degrees(g)) {
            out_sum += deg.out;
            in_sum += deg.in;
        }
        CHECK(out_sum == g.edge_count());
        CHECK(in_sum == g.edge_count());

        const double alpha = 0.85;
        const auto pr = pagerank(g, alpha, 1e-12, 5000);
        double total = 0.0;
        for (double x : pr) {
            total += x;
            CHECK(x >= (1.0 - alpha) / static_cast<double>(n) - 1e-12);
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("results do not depend on ingest order") {
    std::vector<VertexId> vertices{5, 9, 1, 3, 7, 2};
    std::vector<std::pair<VertexId, VertexId>> edges{
        {5, 9}, {9, 1}, {1, 3}, {3, 5}, {7, 2}, {2, 5}, {9, 7}};
    const DirectedGraph a(vertices, edges);

    std::mt19937_64 rng(11);
    std::shuffle(vertices.begin(), vertices.end(), rng);
    std::shuffle(edges.begin(), edges.end(), rng);
    const DirectedGraph b(vertices, edges);

    const ScoringConfig config;
    const auto sa = all_node_scores(a, config);
    const auto sb = all_node_scores(b, config);
    CHECK(sa.ids == sb.ids);
    CHECK(sa.in_degree == sb.in_degree);
    CHECK(sa.out_degree == sb.out_degree);
    CHECK(sa.closeness == sb.closeness);
    CHECK(sa.betweenness == sb.betweenness);
    CHECK(sa.pagerank == sb.pagerank);
}

TEST_CASE("all_node_scores composes the individual operations") {
    SUBCASE("edge-free graph") {
        DirectedGraph g({0, 1, 2, 3}, {});
        const auto s = all_node_scores(g, ScoringConfig{});
        for (std::size_t v = 0; v < 4; ++v) {
            CHECK(s.in_degree[v] == 0);
            CHECK(s.out_degree[v] == 0);
            CHECK(s.closeness[v] == 0.0);
            CHECK(s.betweenness[v] == 0.0);
            CHECK(s.pagerank[v] == doctest::Approx(0.25).epsilon(1e-12));
        }
    }
    SUBCASE("random graph, field by field") {
        const auto g = oracles::random_graph(9, 0.3, 99);
        const ScoringConfig config;
        const auto s = all_node_scores(g, config);
        const auto deg = degrees(g);
        const auto pr = pagerank(g, config.alpha, config.tol, config.max_iter);
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
            CHECK(s.in_degree[v] == deg[v].in);
            CHECK(s.out_degree[v] == deg[v].out);
            CHECK(s.closeness[v] == closeness(g, g.id_of(v)));
            CHECK(s.betweenness[v] == betweenness(g, g.id_of(v)));
            CHECK(s.pagerank[v] == pr[v]);
        }
    }
}
