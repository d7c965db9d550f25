#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netcurv/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

using namespace netcurv;

// Brute force: every basic solution of a balanced transportation problem sits
// on a spanning tree of the bipartite row/column graph, so enumerating all
// (R+C-1)-subsets of cells, solving each tree by leaf elimination, and taking
// the cheapest feasible one gives the exact optimum.
static double oracle_cost(const std::vector<double>& a, const std::vector<double>& b,
                          const std::vector<double>& cost) {
    const int R = static_cast<int>(a.size()), C = static_cast<int>(b.size());
    const int M = R * C, K = R + C - 1, N = R + C;
    std::vector<int> comb(K);
    std::iota(comb.begin(), comb.end(), 0);
    double best = std::numeric_limits<double>::infinity();

    auto advance = [&]() {
        int i = K - 1;
        while (i >= 0 && comb[i] == M - K + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < K; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };

    do {
        std::vector<int> deg(N, 0);
        std::vector<std::vector<int>> cells_at(N);
        for (int k = 0; k < K; ++k) {
            int r = comb[k] / C, c = comb[k] % C;
            ++deg[r];
            ++deg[R + c];
            cells_at[r].push_back(k);
            cells_at[R + c].push_back(k);
        }
        std::vector<double> rem(N);
        for (int i = 0; i < R; ++i) rem[i] = a[i];
        for (int j = 0; j < C; ++j) rem[R + j] = b[j];
        std::vector<char> cell_done(K, 0), node_done(N, 0);
        std::vector<double> flow(K, 0.0);
        int resolved = 0;
        bool progress = true;
        while (progress) {
            progress = false;
            for (int node = 0; node < N; ++node) {
                if (node_done[node] || deg[node] != 1) continue;
                int k = -1;
                for (int cand : cells_at[node])
                    if (!cell_done[cand]) { k = cand; break; }
                if (k < 0) continue;
                int r = comb[k] / C, c = comb[k] % C;
                flow[k] = rem[node];
                rem[r] -= flow[k] * (node == r ? 0.0 : 1.0);
                rem[R + c] -= flow[k] * (node == R + c ? 0.0 : 1.0);
                rem[node] = 0.0;
                cell_done[k] = 1;
                node_done[node] = 1;
                --deg[r];
                --deg[R + c];
                ++resolved;
                progress = true;
            }
        }
        if (resolved != K) continue; // subset has a cycle or is disconnected
        bool feasible = true;
        for (int node = 0; node < N; ++node)
            if (std::abs(rem[node]) > 1e-9) feasible = false;
        for (int k = 0; k < K; ++k)
            if (flow[k] < -1e-12) feasible = false;
        if (!feasible) continue;
        double total = 0.0;
        for (int k = 0; k < K; ++k) total += flow[k] * cost[comb[k]];
        best = std::min(best, total);
    } while (advance());
    return best;
}

TEST_CASE("single cell problem") {
    CHECK(transport_cost({1.0}, {1.0}, {3.5}) == doctest::Approx(3.5).epsilon(1e-12));
    CHECK(transport_cost({0.25}, {0.25}, {2.0}) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("identical measures cost nothing when staying is free") {
    std::vector<double> m{0.5, 0.3, 0.2};
    std::vector<double> cost{0, 1, 2, 1, 0, 1, 2, 1, 0};
    CHECK(transport_cost(m, m, cost) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("hand-checked two by two") {
    // move 0.3 of the surplus across at unit cost
    double got = transport_cost({0.3, 0.7}, {0.6, 0.4}, {0, 1, 1, 0});
    CHECK(got == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("matches brute force on random instances") {
    std::mt19937_64 rng(918273);
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        int R = 1 + static_cast<int>(rng() % 4);
        int C = 1 + static_cast<int>(rng() % 4);
        std::vector<double> a(R), b(C);
        double sa = 0, sb = 0;
        for (double& x : a) { x = unif(rng); sa += x; }
        for (double& x : b) { x = unif(rng); sb += x; }
        for (double& x : a) x /= sa;
        for (double& x : b) x /= sb;
        std::vector<double> cost(R * C);
        bool integer_costs = trial % 2 == 0;
        for (double& c : cost)
            c = integer_costs ? static_cast<double>(rng() % 6) : unif(rng) * 4.0;
        double got = transport_cost(a, b, cost);
        double want = oracle_cost(a, b, cost);
        CHECK(got == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("zero-mass points are tolerated") {
    double got = transport_cost({0.0, 1.0}, {0.5, 0.0, 0.5}, {9, 9, 9, 1, 9, 2});
    CHECK(got == doctest::Approx(1.5).epsilon(1e-12));
    double single = transport_cost({1.0, 0.0}, {1.0}, {2.0, 7.0});
    CHECK(single == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("transposing the problem gives the same cost") {
    std::mt19937_64 rng(5551);
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        int R = 1 + static_cast<int>(rng() % 5);
        int C = 1 + static_cast<int>(rng() % 5);
        std::vector<double> a(R), b(C);
        double sa = 0, sb = 0;
        for (double& x : a) { x = unif(rng); sa += x; }
        for (double& x : b) { x = unif(rng); sb += x; }
        for (double& x : a) x /= sa;
        for (double& x : b) x /= sb;
        std::vector<double> cost(R * C), costT(R * C);
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < C; ++j) {
                cost[i * C + j] = unif(rng) * 3.0;
                costT[j * R + i] = cost[i * C + j];
            }
        double fwd = transport_cost(a, b, cost);
        double back = transport_cost(b, a, costT);
        CHECK(fwd == doctest::Approx(back).epsilon(1e-9));
    }
}

TEST_CASE("scaling costs scales the optimum") {
    std::vector<double> a{0.2, 0.5, 0.3}, b{0.4, 0.6};
    std::vector<double> cost{1, 4, 2, 0, 5, 3};
    std::vector<double> doubled(cost);
    for (double& c : doubled) c *= 2.0;
    CHECK(transport_cost(a, b, doubled) ==
          doctest::Approx(2.0 * transport_cost(a, b, cost)).epsilon(1e-12));
}

TEST_CASE("deterministic across calls") {
    std::vector<double> a{0.125, 0.375, 0.5}, b{0.25, 0.25, 0.5};
    std::vector<double> cost{2, 1, 3, 0, 4, 1, 5, 2, 0};
    double first = transport_cost(a, b, cost);
    for (int i = 0; i < 10; ++i)
        CHECK(transport_cost(a, b, cost) == first);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(transport_cost({}, {1.0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(transport_cost({1.0}, {1.0}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(transport_cost({-0.5, 1.5}, {1.0}, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(transport_cost({1.0}, {0.5}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(transport_cost({1.0}, {1.0},
                                   {std::numeric_limits<double>::quiet_NaN()}),
                    std::invalid_argument);
}

TEST_CASE("larger instances agree with brute force") {
    std::mt19937_64 rng(72901);
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        int R = 5, C = 3;
        std::vector<double> a(R), b(C);
        double sa = 0, sb = 0;
        for (double& x : a) { x = unif(rng); sa += x; }
        for (double& x : b) { x = unif(rng); sb += x; }
        for (double& x : a) x /= sa;
        for (double& x : b) x /= sb;
        std::vector<double> cost(R * C);
        for (double& c : cost) c = static_cast<double>(rng() % 8);
        CHECK(transport_cost(a, b, cost) ==
              doctest::Approx(oracle_cost(a, b, cost)).epsilon(1e-9));
    }
}
