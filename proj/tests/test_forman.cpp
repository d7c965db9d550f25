#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netcurv/forman.hpp"
#include "netcurv/graph.hpp"

#include <cmath>
#include <random>

using namespace netcurv;

static Graph complete_graph(int n) {
    std::vector<std::pair<Label, Label>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return Graph::from_edge_list(pairs);
}

static Graph star(int m) { // center 0 with m leaves
    std::vector<std::pair<Label, Label>> pairs;
    for (int i = 1; i <= m; ++i) pairs.emplace_back(0, i);
    return Graph::from_edge_list(pairs);
}

static Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<Label, Label>> pairs;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unif(rng) < p) pairs.emplace_back(i, j);
    pairs.emplace_back(n - 1, n - 1); // force vertex count to n even if sparse
    return Graph::from_edge_list(pairs);
}

TEST_CASE("complete graph edges") {
    for (int n : {3, 5, 10, 34}) {
        Graph g = complete_graph(n);
        auto f = forman_edge(g);
        CHECK(f.kind == CurvatureKind::FORMAN);
        for (double v : f.values) CHECK(v == 4.0 - 2.0 * (n - 1));
    }
    CHECK(forman_edge(complete_graph(34)).values[0] == -62.0);
}

TEST_CASE("star edges have curvature 3 minus leaf count") {
    for (int m : {1, 2, 5, 20}) {
        Graph g = star(m);
        auto f = forman_edge(g);
        for (double v : f.values) CHECK(v == 3.0 - m);
        auto fv = forman_vertex(g, f);
        CHECK(fv.values[0] == m * (3.0 - m)); // center
        for (int leaf = 1; leaf <= m; ++leaf) CHECK(fv.values[leaf] == 3.0 - m);
    }
}

TEST_CASE("double star bridge") {
    // centers 0 and 1 joined by a bridge, m and mp leaves
    for (int m : {2, 4}) {
        for (int mp : {3, 7}) {
            std::vector<std::pair<Label, Label>> pairs{{0, 1}};
            Label next = 2;
            for (int i = 0; i < m; ++i) pairs.emplace_back(0, next++);
            for (int i = 0; i < mp; ++i) pairs.emplace_back(1, next++);
            Graph g = Graph::from_edge_list(pairs);
            auto f = forman_edge(g);
            EdgeId bridge = *g.edge_id(0, 1);
            CHECK(f.values[bridge] == 2.0 - m - mp);
        }
    }
}

TEST_CASE("triangle and K4 augmented values") {
    Graph k3 = complete_graph(3);
    auto f3 = forman_edge(k3);
    auto a3 = augmented_forman_edge(k3);
    CHECK(a3.kind == CurvatureKind::AUGMENTED_FORMAN);
    for (double v : f3.values) CHECK(v == 0.0);
    for (double v : a3.values) CHECK(v == 3.0);
    auto av = curvature_vertex_sum(k3, a3);
    for (double v : av.values) CHECK(v == 6.0);
    auto fv = curvature_vertex_sum(k3, f3);
    for (double v : fv.values) CHECK(v == 0.0);

    Graph k4 = complete_graph(4);
    for (double v : forman_edge(k4).values) CHECK(v == -2.0);
    for (double v : augmented_forman_edge(k4).values) CHECK(v == 4.0);
    // same numbers out of the literal weighted evaluation
    Graph k4w = k4.with_weights(std::vector<double>(4, 1.0), std::vector<double>(6, 1.0));
    auto direct = augmented_forman_edge(k4w, [](VertexId, VertexId, VertexId) { return 1.0; });
    for (double v : direct.values) CHECK(v == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("tree edges are unchanged by augmentation") {
    Graph tree = Graph::from_edge_list({{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
    auto f = forman_edge(tree);
    auto a = augmented_forman_edge(tree);
    for (EdgeId e = 0; e < tree.edge_count(); ++e) CHECK(f.values[e] == a.values[e]);
}

TEST_CASE("triangle identity on random graphs") {
    std::mt19937_64 rng(40817);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 20 + static_cast<int>(rng() % 181);
        double p = 0.05 + 0.1 * (trial % 4);
        Graph g = random_graph(n, p, rng);
        auto f = forman_edge(g);
        auto a = augmented_forman_edge(g);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            CHECK(a.values[e] == f.values[e] + 3.0 * triangles_through_edge(g, e));
    }
}

TEST_CASE("weighted path hand computation") {
    Graph p3 = Graph::from_edge_list({{0, 1}, {1, 2}});
    Graph w = p3.with_weights({2.0, 1.0, 3.0}, {4.0, 9.0});
    auto f = forman_edge(w);
    // edge (0,1): 4*(2/4 + 1/4 - 1/sqrt(36)) = 7/3
    CHECK(f.values[*w.edge_id(0, 1)] == doctest::Approx(7.0 / 3.0).epsilon(1e-12));
    // edge (1,2): 9*(1/9 + 3/9 - 1/sqrt(36)) = 5/2
    CHECK(f.values[*w.edge_id(1, 2)] == doctest::Approx(2.5).epsilon(1e-12));

    // no faces anywhere, so augmentation changes nothing even with weights
    auto a = augmented_forman_edge(w);
    for (EdgeId e = 0; e < w.edge_count(); ++e)
        CHECK(a.values[e] == doctest::Approx(f.values[e]).epsilon(1e-12));
}

TEST_CASE("weighted triangle with a heavy face") {
    Graph k3 = complete_graph(3);
    Graph w = k3.with_weights({1.0, 1.0, 1.0}, {1.0, 1.0, 1.0});
    auto a = augmented_forman_edge(w, [](VertexId, VertexId, VertexId) { return 2.0; });
    // per edge: faces 1/2, vertices 2, no parallels -> 2.5
    for (double v : a.values) CHECK(v == doctest::Approx(2.5).epsilon(1e-12));
    CHECK_THROWS_AS(augmented_forman_edge(w, [](VertexId, VertexId, VertexId) { return 0.0; }),
                    std::domain_error);
}

TEST_CASE("scaling every weight by c scales curvature by c") {
    std::mt19937_64 rng(2218);
    Graph g = random_graph(40, 0.15, rng);
    std::uniform_real_distribution<double> unif(0.5, 3.0);
    std::vector<double> vw(g.vertex_count()), ew(g.edge_count());
    for (double& x : vw) x = unif(rng);
    for (double& x : ew) x = unif(rng);
    Graph w = g.with_weights(vw, ew);
    auto base = forman_edge(w);
    for (double c : {2.0, 0.25, 7.5}) {
        std::vector<double> vw2 = vw, ew2 = ew;
        for (double& x : vw2) x *= c;
        for (double& x : ew2) x *= c;
        auto scaled = forman_edge(w.with_weights(vw2, ew2));
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            CHECK(scaled.values[e] == doctest::Approx(c * base.values[e]).epsilon(1e-12));
    }
}

TEST_CASE("uniform weights c match combinatorial values times c") {
    std::mt19937_64 rng(99);
    Graph g = random_graph(30, 0.2, rng);
    auto combinatorial = forman_edge(g);
    double c = 1.75;
    Graph w = g.with_weights(std::vector<double>(g.vertex_count(), c),
                             std::vector<double>(g.edge_count(), c));
    auto weighted = forman_edge(w);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        CHECK(weighted.values[e] == doctest::Approx(c * combinatorial.values[e]).epsilon(1e-12));
}

TEST_CASE("vertex sums double count edge totals") {
    std::mt19937_64 rng(313);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(60, 0.1, rng);
        EdgeCurvatureVector curvs[] = {forman_edge(g), augmented_forman_edge(g)};
        for (const auto& curv : curvs) {
            auto vs = curvature_vertex_sum(g, curv);
            double edge_total = 0.0, vertex_total = 0.0;
            for (double x : curv.values) edge_total += x;
            for (double x : vs.values) vertex_total += x;
            CHECK(vertex_total == doctest::Approx(2.0 * edge_total).epsilon(1e-12));
        }
    }
}

TEST_CASE("isolated vertices carry zero") {
    Graph g = Graph::from_edge_list({{0, 1}, {3, 3}});
    auto f = forman_edge(g);
    auto fv = curvature_vertex_sum(g, f);
    CHECK(fv.values[2] == 0.0); // label 3 -> isolated
}

TEST_CASE("vertex aggregation rejects mismatched input") {
    Graph g = complete_graph(3);
    EdgeCurvatureVector bad{CurvatureKind::FORMAN, {1.0, 2.0}};
    CHECK_THROWS_AS(curvature_vertex_sum(g, bad), std::domain_error);
}
