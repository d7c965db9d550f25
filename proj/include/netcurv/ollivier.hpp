#pragma once

#include "netcurv/curvature.hpp"
#include "netcurv/graph.hpp"

#include <vector>

namespace netcurv {

// Random-walk step distribution: with probability `idleness` the walker stays
// put, otherwise it moves to a uniformly random neighbor. 0.5 is the lazy
// walk, 0 the non-lazy one.
struct WalkKind {
    double idleness = 0.5;
};

// probability measure on vertices; only strictly positive masses are stored
struct SparseMeasure {
    std::vector<VertexId> support;
    std::vector<double> mass;
};

// optimal coupling between two measures under the hop metric
struct TransportPlan {
    std::vector<VertexId> rows, cols;
    std::vector<double> flow; // row-major |rows| x |cols|
    double cost = 0.0;
};

SparseMeasure walk_measure(const Graph& g, VertexId x, WalkKind walk);

// Exact W1 between two measures whose supports live in one connected
// component. Distances are hop counts gathered by BFS from each source
// support vertex, stopping as soon as every target support vertex is reached.
TransportPlan wasserstein1(const Graph& g, const SparseMeasure& a, const SparseMeasure& b);

// kappa(x,y) = 1 - W1(m_x, m_y) for each edge (adjacent vertices are at hop
// distance exactly 1). The graph must be connected; extract the largest
// connected component first if it is not.
EdgeCurvatureVector ollivier_edge(const Graph& g, WalkKind walk, int threads = 1);

VertexCurvatureVector ollivier_vertex(const Graph& g, const EdgeCurvatureVector& edge_curv);

} // namespace netcurv
