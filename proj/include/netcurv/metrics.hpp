#pragma once

#include "netcurv/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace netcurv {

// Brandes all-source accumulation over unweighted shortest paths, one BFS +
// dependency pass per source. Values are raw sums over unordered pairs
// (ordered-pair totals halved); vertex scores exclude the endpoints of each
// pair. Left unnormalized: every consumer is rank- or affine-invariant.
struct BetweennessResult {
    std::vector<double> edge;   // per EdgeId
    std::vector<double> vertex; // per VertexId
};
BetweennessResult betweenness(const Graph& g, int threads = 1);
std::vector<double> edge_betweenness(const Graph& g, int threads = 1);
std::vector<double> vertex_betweenness(const Graph& g, int threads = 1);

// common-neighbor count of the endpoints, one value per edge
std::vector<double> embeddedness(const Graph& g);

// For edge (u,v) with common neighborhood C: number of unordered pairs
// {s,t} in C that are non-adjacent and share no common neighbor inside C
// beyond u and v themselves. Optionally divided by the embeddedness.
std::vector<double> dispersion(const Graph& g, bool normalize_by_embeddedness = false);

std::vector<double> degree_column(const Graph& g);

// cc(v) = realized fraction of edges among v's neighbors; 0 when deg(v) < 2
std::vector<double> clustering_coefficient(const Graph& g);

// Named columns for one network, exported as CSV (one file per scope).
// Column order is insertion order, which the CSV writer preserves.
struct MetricTable {
    std::string network_id;
    std::vector<std::pair<std::string, std::vector<double>>> edge_columns;
    std::vector<std::pair<std::string, std::vector<double>>> vertex_columns;

    void add_edge_column(const Graph& g, const std::string& name, std::vector<double> values);
    void add_vertex_column(const Graph& g, const std::string& name, std::vector<double> values);
};

// header "u,v,<columns...>", one row per edge with original vertex labels
void write_edge_csv(const Graph& g, const MetricTable& table, const std::string& path);
// header "vertex,<columns...>", one row per vertex
void write_vertex_csv(const Graph& g, const MetricTable& table, const std::string& path);

} // namespace netcurv
