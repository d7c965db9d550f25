#include "netcurv/metrics.hpp"

#include "netcurv/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace netcurv {

BetweennessResult betweenness(const Graph& g, int threads) {
    const int n = g.vertex_count();
    const EdgeId m = g.edge_count();
    const long long chunk = 64; // fixed chunk split keeps merges independent of thread count
    const long long nchunks = n == 0 ? 0 : (n + chunk - 1) / chunk;

    std::vector<std::vector<double>> edge_acc(nchunks), vertex_acc(nchunks);

    parallel_chunks(n, chunk, threads, [&](long long lo, long long hi, long long ci) {
        std::vector<double>& eacc = edge_acc[ci];
        std::vector<double>& vacc = vertex_acc[ci];
        eacc.assign(m, 0.0);
        vacc.assign(n, 0.0);
        std::vector<int> dist(n);
        std::vector<double> sigma(n), delta(n);
        std::vector<VertexId> order;
        order.reserve(n);
        for (long long src = lo; src < hi; ++src) {
            const VertexId s = static_cast<VertexId>(src);
            std::fill(dist.begin(), dist.end(), -1);
            std::fill(sigma.begin(), sigma.end(), 0.0);
            std::fill(delta.begin(), delta.end(), 0.0);
            order.clear();
            dist[s] = 0;
            sigma[s] = 1.0;
            order.push_back(s);
            for (size_t head = 0; head < order.size(); ++head) {
                const VertexId v = order[head];
                for (VertexId w : g.neighbors(v)) {
                    if (dist[w] < 0) {
                        dist[w] = dist[v] + 1;
                        order.push_back(w);
                    }
                    if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
                }
            }
            // dependency pass, farthest vertices first
            for (size_t idx = order.size(); idx-- > 1;) {
                const VertexId w = order[idx];
                auto nbrs = g.neighbors(w);
                auto inc = g.incident_edges(w);
                for (size_t i = 0; i < nbrs.size(); ++i) {
                    const VertexId v = nbrs[i];
                    if (dist[v] != dist[w] - 1) continue;
                    const double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
                    delta[v] += c;
                    eacc[inc[i]] += c;
                }
                vacc[w] += delta[w];
            }
            // leftover: delta[s] would count paths ending at s's neighbors; s
            // itself is an endpoint for every pair it sources, so nothing is
            // added for the source
        }
    });

    BetweennessResult out;
    out.edge.assign(m, 0.0);
    out.vertex.assign(n, 0.0);
    for (long long ci = 0; ci < nchunks; ++ci) {
        for (EdgeId e = 0; e < m; ++e) out.edge[static_cast<size_t>(e)] += edge_acc[ci][e];
        for (int v = 0; v < n; ++v) out.vertex[v] += vertex_acc[ci][v];
    }
    for (double& x : out.edge) x *= 0.5;   // each unordered pair was seen from both ends
    for (double& x : out.vertex) x *= 0.5;
    return out;
}

std::vector<double> edge_betweenness(const Graph& g, int threads) {
    return betweenness(g, threads).edge;
}

std::vector<double> vertex_betweenness(const Graph& g, int threads) {
    return betweenness(g, threads).vertex;
}

std::vector<double> embeddedness(const Graph& g) {
    std::vector<double> out(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out[static_cast<size_t>(e)] = static_cast<double>(triangles_through_edge(g, e));
    return out;
}

std::vector<double> dispersion(const Graph& g, bool normalize_by_embeddedness) {
    std::vector<double> out(g.edge_count(), 0.0);
    std::vector<VertexId> common;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        common.clear();
        auto a = g.neighbors(u);
        auto b = g.neighbors(v);
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j]) ++i;
            else if (a[i] > b[j]) ++j;
            else { common.push_back(a[i]); ++i; ++j; }
        }
        long long score = 0;
        for (size_t si = 0; si < common.size(); ++si) {
            for (size_t ti = si + 1; ti < common.size(); ++ti) {
                const VertexId s = common[si], t = common[ti];
                if (g.edge_id(s, t)) continue;
                bool linked_inside = false;
                for (VertexId w : common) {
                    if (w == s || w == t) continue;
                    if (g.edge_id(w, s) && g.edge_id(w, t)) {
                        linked_inside = true;
                        break;
                    }
                }
                if (!linked_inside) ++score;
            }
        }
        double value = static_cast<double>(score);
        if (normalize_by_embeddedness)
            value = common.empty() ? 0.0 : value / static_cast<double>(common.size());
        out[static_cast<size_t>(e)] = value;
    }
    return out;
}

std::vector<double> degree_column(const Graph& g) {
    std::vector<double> out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out[v] = static_cast<double>(g.degree(v));
    return out;
}

std::vector<double> clustering_coefficient(const Graph& g) {
    std::vector<double> out(g.vertex_count(), 0.0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto nbrs = g.neighbors(v);
        const int d = static_cast<int>(nbrs.size());
        if (d < 2) continue;
        long long links = 0;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (g.edge_id(nbrs[i], nbrs[j])) ++links;
        out[v] = 2.0 * static_cast<double>(links) / (static_cast<double>(d) * (d - 1));
    }
    return out;
}

namespace {

void check_column(size_t want_len, const std::string& name, const std::vector<double>& values,
                  const std::vector<std::pair<std::string, std::vector<double>>>& existing) {
    if (values.size() != want_len)
        throw std::invalid_argument("column '" + name + "' has the wrong length");
    for (double x : values)
        if (!std::isfinite(x))
            throw std::invalid_argument("column '" + name + "' contains a non-finite value");
    for (const auto& [other, _] : existing)
        if (other == name) throw std::invalid_argument("duplicate column name '" + name + "'");
}

std::string format_value(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

void MetricTable::add_edge_column(const Graph& g, const std::string& name,
                                  std::vector<double> values) {
    check_column(static_cast<size_t>(g.edge_count()), name, values, edge_columns);
    edge_columns.emplace_back(name, std::move(values));
}

void MetricTable::add_vertex_column(const Graph& g, const std::string& name,
                                    std::vector<double> values) {
    check_column(static_cast<size_t>(g.vertex_count()), name, values, vertex_columns);
    vertex_columns.emplace_back(name, std::move(values));
}

void write_edge_csv(const Graph& g, const MetricTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << "u,v";
    for (const auto& [name, _] : table.edge_columns) out << "," << name;
    out << "\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        out << g.label(u) << "," << g.label(v);
        for (const auto& [_, values] : table.edge_columns)
            out << "," << format_value(values[static_cast<size_t>(e)]);
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_vertex_csv(const Graph& g, const MetricTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << "vertex";
    for (const auto& [name, _] : table.vertex_columns) out << "," << name;
    out << "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << g.label(v);
        for (const auto& [_, values] : table.vertex_columns) out << "," << format_value(values[v]);
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace netcurv
