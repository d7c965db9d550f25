#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace netcurv {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using Label = std::int64_t;   // vertex id as it appeared in the input

struct GraphBuildStats {
    std::int64_t self_loops = 0;
    std::int64_t duplicates = 0;
};

// Immutable undirected simple graph. Edges are stored once as (u, v) with
// u < v in lexicographic order; the edge id is the position in that table.
// Adjacency is CSR with neighbor lists sorted ascending, and a parallel
// array mapping each adjacency slot to its edge id. Vertex ids are dense
// 0..n-1; original input labels are kept so reports can show source ids.
class Graph {
public:
    Graph() = default;

    // Builds from raw (label, label) pairs: self-loops and duplicates are
    // dropped (counted in stats), vertices relabeled contiguously in
    // ascending label order. Every label that appears — even only in a
    // discarded self-loop — becomes a vertex.
    static Graph from_edge_list(const std::vector<std::pair<Label, Label>>& pairs,
                                GraphBuildStats* stats = nullptr);

    // Builds on exactly n vertices 0..n-1 (labels identical), so isolated
    // vertices survive. Endpoints outside [0, n) are rejected.
    static Graph on_vertices(int n,
                             const std::vector<std::pair<VertexId, VertexId>>& pairs);

    int vertex_count() const { return n_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

    std::pair<VertexId, VertexId> edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    int degree(VertexId v) const { return adj_offset_[v + 1] - adj_offset_[v]; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adj_vertex_.data() + adj_offset_[v],
                static_cast<size_t>(adj_offset_[v + 1] - adj_offset_[v])};
    }
    std::span<const EdgeId> incident_edges(VertexId v) const {
        return {adj_edge_.data() + adj_offset_[v],
                static_cast<size_t>(adj_offset_[v + 1] - adj_offset_[v])};
    }

    double vertex_weight(VertexId v) const { return vertex_weight_[v]; }
    double edge_weight(EdgeId e) const { return edge_weight_[static_cast<size_t>(e)]; }
    bool has_unit_weights() const;

    Label label(VertexId v) const { return label_[v]; }
    const std::vector<Label>& labels() const { return label_; }

    std::optional<EdgeId> edge_id(VertexId u, VertexId v) const;

    // Copy with replaced weights; lengths must match, all weights > 0.
    Graph with_weights(std::vector<double> vertex_weights,
                       std::vector<double> edge_weights) const;

    // Induced subgraph on `keep`; vertices relabeled 0..k-1 in ascending
    // order of their current id, labels and weights carried over.
    Graph induced_subgraph(const std::vector<VertexId>& keep) const;

    // Same vertex set, keeping only edges with removed[e] == 0.
    Graph edge_subgraph(const std::vector<char>& removed) const;

    // Checks the structural invariants (simple, sorted, consistent
    // adjacency, positive weights); throws std::logic_error on violation.
    void validate() const;

private:
    void build_adjacency();

    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<double> vertex_weight_;
    std::vector<double> edge_weight_;
    std::vector<Label> label_;
    std::vector<int> adj_offset_;       // n+1
    std::vector<VertexId> adj_vertex_;  // 2|E|
    std::vector<EdgeId> adj_edge_;      // 2|E|, parallel to adj_vertex_
};

// Induced subgraph on the largest connected component; ties go to the
// component containing the smallest vertex id. `kept`, when given, receives
// the surviving vertex ids of g in ascending order.
Graph largest_connected_component(const Graph& g, std::vector<VertexId>* kept = nullptr);

// |N(u) ∩ N(v)| for e = (u, v), by sorted-list intersection.
int triangles_through_edge(const Graph& g, EdgeId e);

// Hop distances from source for every vertex within cutoff (all reachable
// vertices if cutoff is absent); unreachable vertices are absent.
std::unordered_map<VertexId, int> bfs_distances(const Graph& g, VertexId source,
                                                std::optional<int> cutoff = std::nullopt);

// Hot-path BFS: fills dist (resized to n, -1 = unreached) with hop
// distances from source, using queue as scratch. Returns vertices reached.
int bfs_fill(const Graph& g, VertexId source, std::vector<int>& dist,
             std::vector<VertexId>& queue);

// Edge-list text file: "u v" per line, '%' or '#' comment lines, extra
// trailing columns ignored. The writer emits original labels under a '%'
// header recording n and |E|.
Graph read_edge_list(const std::string& path, GraphBuildStats* stats = nullptr);
void write_edge_list(const Graph& g, const std::string& path);

} // namespace netcurv
