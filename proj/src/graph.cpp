#include "netcurv/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace netcurv {

Graph Graph::from_edge_list(const std::vector<std::pair<Label, Label>>& pairs,
                            GraphBuildStats* stats) {
    GraphBuildStats local;

    std::vector<Label> labels;
    labels.reserve(pairs.size() * 2);
    for (const auto& [a, b] : pairs) {
        if (a < 0 || b < 0)
            throw std::invalid_argument("vertex ids must be nonnegative integers");
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::unordered_map<Label, VertexId> index;
    index.reserve(labels.size() * 2);
    for (size_t i = 0; i < labels.size(); ++i)
        index.emplace(labels[i], static_cast<VertexId>(i));

    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        if (a == b) {
            ++local.self_loops;
            continue;
        }
        VertexId u = index[a];
        VertexId v = index[b];
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    local.duplicates = edges.end() - last;
    edges.erase(last, edges.end());

    Graph g;
    g.n_ = static_cast<int>(labels.size());
    g.label_ = std::move(labels);
    g.edges_ = std::move(edges);
    g.vertex_weight_.assign(g.n_, 1.0);
    g.edge_weight_.assign(g.edges_.size(), 1.0);
    g.build_adjacency();
    if (stats) *stats = local;
    return g;
}

Graph Graph::on_vertices(int n, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");

    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge endpoint outside vertex range");
        if (a == b) continue;
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.label_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) g.label_[static_cast<size_t>(i)] = i;
    g.edges_ = std::move(edges);
    g.vertex_weight_.assign(g.n_, 1.0);
    g.edge_weight_.assign(g.edges_.size(), 1.0);
    g.build_adjacency();
    return g;
}

void Graph::build_adjacency() {
    adj_offset_.assign(n_ + 1, 0);
    for (const auto& [u, v] : edges_) {
        ++adj_offset_[u + 1];
        ++adj_offset_[v + 1];
    }
    for (int v = 0; v < n_; ++v) adj_offset_[v + 1] += adj_offset_[v];

    adj_vertex_.resize(edges_.size() * 2);
    adj_edge_.resize(edges_.size() * 2);
    std::vector<int> cursor(adj_offset_.begin(), adj_offset_.end() - 1);
    // edges_ is lex-sorted, so each vertex receives its neighbors ascending
    for (EdgeId e = 0; e < edge_count(); ++e) {
        const auto& [u, v] = edges_[static_cast<size_t>(e)];
        adj_vertex_[cursor[u]] = v;
        adj_edge_[cursor[u]++] = e;
        adj_vertex_[cursor[v]] = u;
        adj_edge_[cursor[v]++] = e;
    }
}

bool Graph::has_unit_weights() const {
    for (double w : vertex_weight_)
        if (w != 1.0) return false;
    for (double w : edge_weight_)
        if (w != 1.0) return false;
    return true;
}

std::optional<EdgeId> Graph::edge_id(VertexId u, VertexId v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return std::nullopt;
    auto nbrs = neighbors(u);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
    if (it == nbrs.end() || *it != v) return std::nullopt;
    return adj_edge_[adj_offset_[u] + (it - nbrs.begin())];
}

Graph Graph::with_weights(std::vector<double> vertex_weights,
                          std::vector<double> edge_weights) const {
    if (static_cast<int>(vertex_weights.size()) != n_ ||
        edge_weights.size() != edges_.size())
        throw std::invalid_argument("weight vector length mismatch");
    for (double w : vertex_weights)
        if (!(w > 0.0)) throw std::domain_error("vertex weights must be strictly positive");
    for (double w : edge_weights)
        if (!(w > 0.0)) throw std::domain_error("edge weights must be strictly positive");
    Graph g = *this;
    g.vertex_weight_ = std::move(vertex_weights);
    g.edge_weight_ = std::move(edge_weights);
    return g;
}

Graph Graph::induced_subgraph(const std::vector<VertexId>& keep) const {
    std::vector<VertexId> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<VertexId> remap(n_, -1);
    for (size_t i = 0; i < sorted.size(); ++i) {
        VertexId v = sorted[i];
        if (v < 0 || v >= n_) throw std::invalid_argument("induced_subgraph: vertex out of range");
        remap[v] = static_cast<VertexId>(i);
    }

    Graph g;
    g.n_ = static_cast<int>(sorted.size());
    g.label_.reserve(sorted.size());
    g.vertex_weight_.reserve(sorted.size());
    for (VertexId v : sorted) {
        g.label_.push_back(label_[v]);
        g.vertex_weight_.push_back(vertex_weight_[v]);
    }
    for (EdgeId e = 0; e < edge_count(); ++e) {
        const auto& [u, v] = edges_[static_cast<size_t>(e)];
        if (remap[u] >= 0 && remap[v] >= 0) {
            g.edges_.emplace_back(remap[u], remap[v]);
            g.edge_weight_.push_back(edge_weight_[static_cast<size_t>(e)]);
        }
    }
    // remap preserves order, so the edge list stays lex-sorted
    g.build_adjacency();
    return g;
}

Graph Graph::edge_subgraph(const std::vector<char>& removed) const {
    if (removed.size() != edges_.size())
        throw std::invalid_argument("edge_subgraph: mask length mismatch");
    Graph g;
    g.n_ = n_;
    g.label_ = label_;
    g.vertex_weight_ = vertex_weight_;
    for (EdgeId e = 0; e < edge_count(); ++e) {
        if (!removed[static_cast<size_t>(e)]) {
            g.edges_.push_back(edges_[static_cast<size_t>(e)]);
            g.edge_weight_.push_back(edge_weight_[static_cast<size_t>(e)]);
        }
    }
    g.build_adjacency();
    return g;
}

void Graph::validate() const {
    if (static_cast<int>(label_.size()) != n_ ||
        static_cast<int>(vertex_weight_.size()) != n_ ||
        edge_weight_.size() != edges_.size() ||
        static_cast<int>(adj_offset_.size()) != n_ + 1)
        throw std::logic_error("graph: array sizes inconsistent");
    for (size_t i = 0; i < edges_.size(); ++i) {
        const auto& [u, v] = edges_[i];
        if (u < 0 || v >= n_ || u >= v)
            throw std::logic_error("graph: edge endpoints must satisfy 0 <= u < v < n");
        if (i > 0 && !(edges_[i - 1] < edges_[i]))
            throw std::logic_error("graph: edge list not strictly lex-sorted");
    }
    for (double w : vertex_weight_)
        if (!(w > 0.0) || !std::isfinite(w)) throw std::logic_error("graph: nonpositive vertex weight");
    for (double w : edge_weight_)
        if (!(w > 0.0) || !std::isfinite(w)) throw std::logic_error("graph: nonpositive edge weight");

    // adjacency must match what a rebuild from the edge list produces
    Graph rebuilt;
    rebuilt.n_ = n_;
    rebuilt.edges_ = edges_;
    rebuilt.build_adjacency();
    if (rebuilt.adj_offset_ != adj_offset_ || rebuilt.adj_vertex_ != adj_vertex_ ||
        rebuilt.adj_edge_ != adj_edge_)
        throw std::logic_error("graph: adjacency inconsistent with edge list");
    for (VertexId v = 0; v < n_; ++v) {
        auto nbrs = neighbors(v);
        if (!std::is_sorted(nbrs.begin(), nbrs.end()))
            throw std::logic_error("graph: adjacency list not sorted");
    }
}

Graph largest_connected_component(const Graph& g, std::vector<VertexId>* kept) {
    const int n = g.vertex_count();
    std::vector<VertexId> best, current, queue;
    std::vector<char> seen(n, 0);
    for (VertexId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        current.clear();
        queue.clear();
        queue.push_back(s);
        seen[s] = 1;
        for (size_t head = 0; head < queue.size(); ++head) {
            VertexId v = queue[head];
            current.push_back(v);
            for (VertexId w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        // strictly greater keeps the earliest (smallest min-id) component on ties
        if (current.size() > best.size()) best = current;
    }
    std::sort(best.begin(), best.end());
    if (kept) *kept = best;
    return g.induced_subgraph(best);
}

int triangles_through_edge(const Graph& g, EdgeId e) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge id out of range");
    const auto [u, v] = g.edge(e);
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    int count = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

std::unordered_map<VertexId, int> bfs_distances(const Graph& g, VertexId source,
                                                std::optional<int> cutoff) {
    if (source < 0 || source >= g.vertex_count())
        throw std::invalid_argument("bfs_distances: source not in graph");
    std::unordered_map<VertexId, int> dist;
    dist.emplace(source, 0);
    std::vector<VertexId> queue{source};
    for (size_t head = 0; head < queue.size(); ++head) {
        VertexId v = queue[head];
        int d = dist[v];
        if (cutoff && d >= *cutoff) continue;
        for (VertexId w : g.neighbors(v)) {
            if (dist.emplace(w, d + 1).second) queue.push_back(w);
        }
    }
    return dist;
}

int bfs_fill(const Graph& g, VertexId source, std::vector<int>& dist,
             std::vector<VertexId>& queue) {
    dist.assign(g.vertex_count(), -1);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    for (size_t head = 0; head < queue.size(); ++head) {
        VertexId v = queue[head];
        int d = dist[v];
        for (VertexId w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = d + 1;
                queue.push_back(w);
            }
        }
    }
    return static_cast<int>(queue.size());
}

Graph read_edge_list(const std::string& path, GraphBuildStats* stats) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list file: " + path);
    std::vector<std::pair<Label, Label>> pairs;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        char c = line[start];
        if (c == '%' || c == '#') continue;
        std::istringstream ss(line);
        Label a, b;
        if (!(ss >> a >> b))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected two integer vertex ids");
        pairs.emplace_back(a, b);   // trailing columns (weights, timestamps) ignored
    }
    return Graph::from_edge_list(pairs, stats);
}

void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << "% undirected simple graph: n=" << g.vertex_count()
        << " m=" << g.edge_count() << "\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        out << g.label(u) << " " << g.label(v) << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace netcurv
