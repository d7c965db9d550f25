#include "netcurv/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace netcurv {

namespace {

constexpr double kPivotTol = 1e-10;
constexpr double kCertTol = 1e-9;

struct Cell {
    int r, c;
    double flow;
};

} // namespace

TransportSolution transport_solve(const std::vector<double>& supply,
                                  const std::vector<double>& demand,
                                  const std::vector<double>& cost) {
    const int R = static_cast<int>(supply.size());
    const int C = static_cast<int>(demand.size());
    if (R == 0 || C == 0) throw std::invalid_argument("transport: empty measure");
    if (cost.size() != static_cast<size_t>(R) * C)
        throw std::invalid_argument("transport: cost matrix size mismatch");
    double total_supply = 0.0, total_demand = 0.0;
    for (double x : supply) {
        if (!(x >= 0.0)) throw std::invalid_argument("transport: masses must be nonnegative");
        total_supply += x;
    }
    for (double x : demand) {
        if (!(x >= 0.0)) throw std::invalid_argument("transport: masses must be nonnegative");
        total_demand += x;
    }
    if (std::abs(total_supply - total_demand) > 1e-9)
        throw std::invalid_argument("transport: supply and demand totals differ");
    for (double c : cost)
        if (!std::isfinite(c)) throw std::invalid_argument("transport: cost must be finite");

    // --- initial basic feasible solution: Vogel's approximation ---
    // Every allocation retires exactly one row or column (the final one retires
    // both), which makes the resulting R+C-1 cells a spanning tree of the
    // bipartite row/column graph.
    std::vector<double> a = supply, b = demand;
    std::vector<char> row_done(R, 0), col_done(C, 0);
    int rows_left = R, cols_left = C;
    std::vector<Cell> basis;
    basis.reserve(R + C - 1);

    auto allocate = [&](int i, int j) {
        double f = std::min(a[i], b[j]);
        basis.push_back({i, j, f});
        a[i] -= f;
        b[j] -= f;
        if (rows_left == 1 && cols_left == 1) {
            row_done[i] = col_done[j] = 1;
            rows_left = cols_left = 0;
            return;
        }
        // retire the exhausted side, but never the last active row while
        // columns remain (or vice versa) — sub-ulp imbalance between the
        // totals would otherwise strand live nodes and break the tree
        bool prefer_row = (a[i] == 0.0);
        if (a[i] == 0.0 && b[j] == 0.0) prefer_row = rows_left > 1;
        if (prefer_row ? rows_left > 1 : cols_left <= 1) {
            row_done[i] = 1;
            --rows_left;
        } else {
            col_done[j] = 1;
            --cols_left;
        }
    };

    while (rows_left > 1 && cols_left > 1) {
        double best_penalty = -1.0;
        bool best_is_row = true;
        int best_idx = -1;
        auto consider = [&](double penalty, bool is_row, int idx) {
            if (penalty > best_penalty) {
                best_penalty = penalty;
                best_is_row = is_row;
                best_idx = idx;
            }
        };
        for (int i = 0; i < R; ++i) {
            if (row_done[i]) continue;
            double c1 = std::numeric_limits<double>::infinity(), c2 = c1;
            for (int j = 0; j < C; ++j) {
                if (col_done[j]) continue;
                double c = cost[static_cast<size_t>(i) * C + j];
                if (c < c1) { c2 = c1; c1 = c; }
                else if (c < c2) c2 = c;
            }
            consider(c2 - c1, true, i);
        }
        for (int j = 0; j < C; ++j) {
            if (col_done[j]) continue;
            double c1 = std::numeric_limits<double>::infinity(), c2 = c1;
            for (int i = 0; i < R; ++i) {
                if (row_done[i]) continue;
                double c = cost[static_cast<size_t>(i) * C + j];
                if (c < c1) { c2 = c1; c1 = c; }
                else if (c < c2) c2 = c;
            }
            consider(c2 - c1, false, j);
        }
        if (best_is_row) {
            int i = best_idx, jbest = -1;
            double cbest = std::numeric_limits<double>::infinity();
            for (int j = 0; j < C; ++j)
                if (!col_done[j] && cost[static_cast<size_t>(i) * C + j] < cbest) {
                    cbest = cost[static_cast<size_t>(i) * C + j];
                    jbest = j;
                }
            allocate(i, jbest);
        } else {
            int j = best_idx, ibest = -1;
            double cbest = std::numeric_limits<double>::infinity();
            for (int i = 0; i < R; ++i)
                if (!row_done[i] && cost[static_cast<size_t>(i) * C + j] < cbest) {
                    cbest = cost[static_cast<size_t>(i) * C + j];
                    ibest = i;
                }
            allocate(ibest, j);
        }
    }
    while (rows_left > 0 && cols_left > 0) {
        int i = 0, j = 0;
        while (row_done[i]) ++i;
        while (col_done[j]) ++j;
        allocate(i, j);
    }
    if (static_cast<int>(basis.size()) != R + C - 1)
        throw std::logic_error("transport: initial basis has wrong size");

    // --- simplex pivots, Bland's rule on both ends for guaranteed termination ---
    const int N = R + C; // nodes 0..R-1 are rows, R..N-1 are columns
    std::vector<double> u(R, 0.0), v(C, 0.0);
    std::vector<std::vector<std::pair<int, int>>> adj(N); // (other node, basis index)
    std::vector<int> bfs_order, parent(N), parent_cell(N);
    std::vector<char> seen(N);
    bfs_order.reserve(N);

    auto rebuild_tree = [&]() {
        for (auto& l : adj) l.clear();
        for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
            adj[basis[k].r].push_back({R + basis[k].c, k});
            adj[R + basis[k].c].push_back({basis[k].r, k});
        }
    };
    auto compute_duals = [&]() {
        std::fill(seen.begin(), seen.end(), 0);
        bfs_order.clear();
        bfs_order.push_back(0);
        seen[0] = 1;
        u[0] = 0.0;
        for (size_t head = 0; head < bfs_order.size(); ++head) {
            int node = bfs_order[head];
            for (auto [other, k] : adj[node]) {
                if (seen[other]) continue;
                seen[other] = 1;
                double c = cost[static_cast<size_t>(basis[k].r) * C + basis[k].c];
                if (other >= R) v[other - R] = c - u[basis[k].r];
                else u[other] = c - v[basis[k].c];
                bfs_order.push_back(other);
            }
        }
        if (static_cast<int>(bfs_order.size()) != N)
            throw std::logic_error("transport: basis is not a spanning tree");
    };

    const long long max_pivots = 1000 + 200LL * R * C;
    for (long long pivot = 0;; ++pivot) {
        if (pivot > max_pivots) throw std::logic_error("transport: pivot limit exceeded");
        rebuild_tree();
        compute_duals();

        int er = -1, ec = -1;
        for (int i = 0; i < R && er < 0; ++i)
            for (int j = 0; j < C; ++j)
                if (cost[static_cast<size_t>(i) * C + j] - u[i] - v[j] < -kPivotTol) {
                    er = i;
                    ec = j;
                    break;
                }
        if (er < 0) break; // dual feasible: optimal

        // unique tree path from row er to column ec; adding the entering cell
        // closes the cycle
        std::fill(seen.begin(), seen.end(), 0);
        bfs_order.clear();
        bfs_order.push_back(er);
        seen[er] = 1;
        parent[er] = -1;
        for (size_t head = 0; head < bfs_order.size() && !seen[R + ec]; ++head) {
            int node = bfs_order[head];
            for (auto [other, k] : adj[node]) {
                if (seen[other]) continue;
                seen[other] = 1;
                parent[other] = node;
                parent_cell[other] = k;
                bfs_order.push_back(other);
            }
        }
        std::vector<int> path_cells; // from the column end back toward er
        for (int node = R + ec; node != er; node = parent[node])
            path_cells.push_back(parent_cell[node]);

        // signs alternate around the cycle, entering cell positive; the path is
        // stored starting at the entering column, so it begins with a negative
        double theta = std::numeric_limits<double>::infinity();
        int leave_pos = -1;
        long long leave_key = 0;
        for (size_t t = 0; t < path_cells.size(); ++t) {
            if (t % 2 != 0) continue; // even positions lose flow; only they can leave
            const Cell& cell = basis[path_cells[t]];
            long long key = static_cast<long long>(cell.r) * C + cell.c;
            if (cell.flow < theta - 1e-15 ||
                (std::abs(cell.flow - theta) <= 1e-15 && (leave_pos < 0 || key < leave_key))) {
                theta = cell.flow;
                leave_pos = static_cast<int>(t);
                leave_key = key;
            }
        }
        if (leave_pos < 0) throw std::logic_error("transport: no leaving cell on cycle");
        for (size_t t = 0; t < path_cells.size(); ++t) {
            if (t % 2 == 0) basis[path_cells[t]].flow -= theta;
            else basis[path_cells[t]].flow += theta;
        }
        basis[path_cells[leave_pos]] = {er, ec, theta};
    }

    // --- certify the result against the dual before trusting it ---
    double primal = 0.0;
    std::vector<double> row_sum(R, 0.0), col_sum(C, 0.0);
    for (const Cell& cell : basis) {
        if (cell.flow < -1e-12) throw std::logic_error("transport: negative flow in basis");
        primal += cell.flow * cost[static_cast<size_t>(cell.r) * C + cell.c];
        row_sum[cell.r] += cell.flow;
        col_sum[cell.c] += cell.flow;
    }
    for (int i = 0; i < R; ++i)
        if (std::abs(row_sum[i] - supply[i]) > kCertTol)
            throw std::logic_error("transport: row marginal violated");
    for (int j = 0; j < C; ++j)
        if (std::abs(col_sum[j] - demand[j]) > kCertTol)
            throw std::logic_error("transport: column marginal violated");
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j)
            if (cost[static_cast<size_t>(i) * C + j] - u[i] - v[j] < -kCertTol)
                throw std::logic_error("transport: dual infeasible at optimum");
    double dual = 0.0;
    for (int i = 0; i < R; ++i) dual += u[i] * supply[i];
    for (int j = 0; j < C; ++j) dual += v[j] * demand[j];
    if (std::abs(primal - dual) > 1e-7 * std::max(1.0, std::abs(primal)))
        throw std::logic_error("transport: duality gap at optimum");

    TransportSolution out;
    out.cost = primal;
    out.flow.assign(static_cast<size_t>(R) * C, 0.0);
    for (const Cell& cell : basis)
        out.flow[static_cast<size_t>(cell.r) * C + cell.c] = std::max(cell.flow, 0.0);
    return out;
}

double transport_cost(const std::vector<double>& supply,
                      const std::vector<double>& demand,
                      const std::vector<double>& cost) {
    return transport_solve(supply, demand, cost).cost;
}

} // namespace netcurv
