#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netcurv/graph.hpp"

#include <cstdio>
#include <filesystem>
#include <random>
#include <set>

using namespace netcurv;

static Graph triangle() {
    return Graph::from_edge_list({{0, 1}, {0, 2}, {1, 2}});
}

static Graph path3() {
    return Graph::from_edge_list({{0, 1}, {1, 2}});
}

TEST_CASE("edge list construction dedups and relabels") {
    GraphBuildStats stats;
    Graph g = Graph::from_edge_list({{0, 1}, {1, 0}, {2, 2}}, &stats);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(stats.self_loops == 1);
    CHECK(stats.duplicates == 1);
    CHECK(g.label(2) == 2);
    CHECK(g.degree(2) == 0);
    g.validate();
}

TEST_CASE("non-contiguous labels relabel by ascending value") {
    Graph g = Graph::from_edge_list({{100, 7}, {7, 42}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.label(0) == 7);
    CHECK(g.label(1) == 42);
    CHECK(g.label(2) == 100);
    CHECK(g.edge_id(0, 1).has_value());
    CHECK(g.edge_id(0, 2).has_value());
    CHECK(!g.edge_id(1, 2).has_value());
}

TEST_CASE("negative labels rejected") {
    CHECK_THROWS_AS(Graph::from_edge_list({{-1, 2}}), std::invalid_argument);
}

TEST_CASE("adjacency is sorted and handshake holds") {
    Graph g = read_edge_list(NETCURV_DATA_DIR "/zachary.txt");
    CHECK(g.vertex_count() == 34);
    CHECK(g.edge_count() == 78);
    CHECK(g.degree(0) == 16);
    CHECK(g.degree(33) == 17);
    long long degsum = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        degsum += g.degree(v);
        auto nbrs = g.neighbors(v);
        CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
    }
    CHECK(degsum == 2LL * g.edge_count());
    g.validate();
}

TEST_CASE("edge_id agrees with edge endpoints both ways") {
    Graph g = read_edge_list(NETCURV_DATA_DIR "/zachary.txt");
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        CHECK(g.edge_id(u, v) == e);
        CHECK(g.edge_id(v, u) == e);
    }
    CHECK(!g.edge_id(0, 33).has_value());
    CHECK(!g.edge_id(5, 5).has_value());
}

TEST_CASE("incident_edges and neighbors line up") {
    Graph g = read_edge_list(NETCURV_DATA_DIR "/zachary.txt");
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto nbrs = g.neighbors(v);
        auto inc = g.incident_edges(v);
        REQUIRE(nbrs.size() == inc.size());
        for (size_t i = 0; i < nbrs.size(); ++i) {
            auto [a, b] = g.edge(inc[i]);
            CHECK(((a == v && b == nbrs[i]) || (b == v && a == nbrs[i])));
        }
    }
}

TEST_CASE("unit weights by default, with_weights validates") {
    Graph g = triangle();
    CHECK(g.has_unit_weights());
    CHECK(g.vertex_weight(0) == 1.0);
    CHECK(g.edge_weight(0) == 1.0);

    Graph w = g.with_weights({2.0, 1.0, 1.0}, {1.0, 3.0, 1.0});
    CHECK(!w.has_unit_weights());
    CHECK(w.vertex_weight(0) == 2.0);
    CHECK(w.edge_weight(1) == 3.0);
    CHECK(g.has_unit_weights()); // original untouched

    CHECK_THROWS_AS(g.with_weights({1.0, 1.0}, {1.0, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(g.with_weights({1.0, 0.0, 1.0}, {1.0, 1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(g.with_weights({1.0, 1.0, 1.0}, {1.0, -2.0, 1.0}), std::domain_error);
    w.validate();
}

TEST_CASE("largest connected component picks biggest, ties to smallest ids") {
    // component {0,1,2} (triangle) vs {3,4} edge vs isolated 5
    Graph g = Graph::from_edge_list({{0, 1}, {0, 2}, {1, 2}, {3, 4}, {5, 5}});
    std::vector<VertexId> kept;
    Graph lcc = largest_connected_component(g, &kept);
    CHECK(lcc.vertex_count() == 3);
    CHECK(lcc.edge_count() == 3);
    CHECK(kept == std::vector<VertexId>{0, 1, 2});

    // tie: two 2-vertex components, earliest (smallest min id) wins
    Graph t = Graph::from_edge_list({{0, 1}, {2, 3}});
    std::vector<VertexId> kept2;
    largest_connected_component(t, &kept2);
    CHECK(kept2 == std::vector<VertexId>{0, 1});

    // connected graph: LCC is the graph itself
    Graph z = read_edge_list(NETCURV_DATA_DIR "/zachary.txt");
    Graph zl = largest_connected_component(z);
    CHECK(zl.vertex_count() == z.vertex_count());
    CHECK(zl.edge_count() == z.edge_count());
}

TEST_CASE("induced subgraph keeps weights and labels") {
    Graph g = Graph::from_edge_list({{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    Graph w = g.with_weights({1.0, 2.0, 3.0, 4.0}, {1.0, 1.0, 5.0, 1.0});
    Graph s = w.induced_subgraph({1, 2, 3});
    CHECK(s.vertex_count() == 3);
    CHECK(s.edge_count() == 2); // (1,2) and (2,3)
    CHECK(s.vertex_weight(0) == 2.0);
    CHECK(s.label(2) == 3);
    CHECK(s.edge_weight(0) == 5.0);
    s.validate();
    CHECK_THROWS_AS(g.induced_subgraph({0, 99}), std::invalid_argument);
}

TEST_CASE("edge subgraph removes masked edges, keeps all vertices") {
    Graph g = triangle();
    Graph s = g.edge_subgraph({1, 0, 0});
    CHECK(s.vertex_count() == 3);
    CHECK(s.edge_count() == 2);
    CHECK(!s.edge_id(0, 1).has_value());
    s.validate();
    CHECK_THROWS_AS(g.edge_subgraph({1, 0}), std::invalid_argument);
}

TEST_CASE("triangle counts per edge") {
    Graph k4 = Graph::from_edge_list({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    for (EdgeId e = 0; e < k4.edge_count(); ++e)
        CHECK(triangles_through_edge(k4, e) == 2);

    Graph tree = Graph::from_edge_list({{0, 1}, {1, 2}, {1, 3}});
    for (EdgeId e = 0; e < tree.edge_count(); ++e)
        CHECK(triangles_through_edge(tree, e) == 0);

    Graph tri = triangle();
    for (EdgeId e = 0; e < tri.edge_count(); ++e)
        CHECK(triangles_through_edge(tri, e) == 1);
}

static long long brute_triangle_count(const Graph& g) {
    long long t = 0;
    for (VertexId a = 0; a < g.vertex_count(); ++a)
        for (VertexId b = a + 1; b < g.vertex_count(); ++b)
            for (VertexId c = b + 1; c < g.vertex_count(); ++c)
                if (g.edge_id(a, b) && g.edge_id(a, c) && g.edge_id(b, c)) ++t;
    return t;
}

TEST_CASE("sum of per-edge triangles is three times the triangle count") {
    Graph g = read_edge_list(NETCURV_DATA_DIR "/zachary.txt");
    long long s = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) s += triangles_through_edge(g, e);
    CHECK(s == 3 * brute_triangle_count(g));
    CHECK(s == 3 * 45); // known triangle count for this network
}

TEST_CASE("bfs distances with and without cutoff") {
    Graph p = path3();
    auto d = bfs_distances(p, 0);
    CHECK(d.size() == 3);
    CHECK(d[0] == 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == 2);

    auto dc = bfs_distances(p, 0, 1);
    CHECK(dc.size() == 2);
    CHECK(dc.count(2) == 0);

    Graph c4 = Graph::from_edge_list({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto d4 = bfs_distances(c4, 0);
    CHECK(d4[2] == 2);
    CHECK(d4[1] == 1);
    CHECK(d4[3] == 1);

    Graph disc = Graph::from_edge_list({{0, 1}, {2, 3}});
    auto dd = bfs_distances(disc, 0);
    CHECK(dd.size() == 2);
    CHECK(dd.count(2) == 0);
}

TEST_CASE("bfs_fill matches bfs_distances and marks unreachable") {
    Graph disc = Graph::from_edge_list({{0, 1}, {1, 2}, {3, 4}});
    std::vector<int> dist;
    std::vector<VertexId> queue;
    int reached = bfs_fill(disc, 0, dist, queue);
    CHECK(reached == 3);
    CHECK(dist[2] == 2);
    CHECK(dist[3] == -1);
    CHECK(dist[4] == -1);
}

TEST_CASE("bfs distances satisfy the triangle inequality over edges") {
    Graph g = read_edge_list(NETCURV_DATA_DIR "/zachary.txt");
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        auto d = bfs_distances(g, s);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            CHECK(std::abs(d[u] - d[v]) <= 1);
        }
    }
}

TEST_CASE("edge list round trip preserves the graph") {
    Graph g = read_edge_list(NETCURV_DATA_DIR "/zachary.txt");
    auto tmp = std::filesystem::temp_directory_path() / "netcurv_roundtrip.txt";
    write_edge_list(g, tmp.string());
    Graph h = read_edge_list(tmp.string());
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.edge_count() == g.edge_count());
    CHECK(h.edges() == g.edges());
    CHECK(h.labels() == g.labels());
    std::filesystem::remove(tmp);
}

TEST_CASE("reader skips comments and tolerates trailing columns") {
    auto tmp = std::filesystem::temp_directory_path() / "netcurv_reader.txt";
    {
        std::FILE* f = std::fopen(tmp.string().c_str(), "w");
        std::fputs("% comment\n# another\n\n  \t\n1 2 1.5 999\n2 3\n", f);
        std::fclose(f);
    }
    Graph g = read_edge_list(tmp.string());
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    std::filesystem::remove(tmp);

    {
        std::FILE* f = std::fopen(tmp.string().c_str(), "w");
        std::fputs("1 2\n3\n", f);
        std::fclose(f);
    }
    CHECK_THROWS_AS(read_edge_list(tmp.string()), std::runtime_error);
    std::filesystem::remove(tmp);

    CHECK_THROWS_AS(read_edge_list("/nonexistent/nowhere.txt"), std::runtime_error);
}

TEST_CASE("random graphs validate and round-trip through subgraph ops") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 40);
        std::vector<std::pair<Label, Label>> pairs;
        int m = static_cast<int>(rng() % (2 * n));
        for (int i = 0; i < m; ++i)
            pairs.emplace_back(static_cast<Label>(rng() % n), static_cast<Label>(rng() % n));
        Graph g = Graph::from_edge_list(pairs);
        g.validate();

        std::set<std::pair<VertexId, VertexId>> expect;
        for (auto [a, b] : pairs) {
            if (a == b) continue;
            // from_edge_list relabels, but labels here are already 0..n-1 dense only
            // if every id appears; map through label positions instead
            (void)a;
        }
        // handshake + no parallel edges
        std::set<std::pair<VertexId, VertexId>> seen;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            CHECK(u < v);
            CHECK(seen.insert({u, v}).second);
        }

        Graph lcc = largest_connected_component(g);
        lcc.validate();
        if (g.edge_count() > 0) {
            std::vector<char> mask(g.edge_count(), 0);
            mask[0] = 1;
            Graph s = g.edge_subgraph(mask);
            s.validate();
            CHECK(s.edge_count() == g.edge_count() - 1);
        }
    }
}
