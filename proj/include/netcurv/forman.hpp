#pragma once

#include "netcurv/curvature.hpp"
#include "netcurv/graph.hpp"

#include <functional>

namespace netcurv {

// Face weight callback for the augmented curvature: receives the triangle's
// vertices in ascending order, must return a strictly positive weight.
using FaceWeightFn = std::function<double(VertexId, VertexId, VertexId)>;

// F(e): combinatorial form 4 - deg(v1) - deg(v2) on unit weights (computed in
// integer arithmetic), otherwise the weighted expression with the penalty sums
// running over edges incident to either endpoint, excluding e itself.
EdgeCurvatureVector forman_edge(const Graph& g);

// F#(e): Forman curvature augmented with triangle faces. With unit weights and
// unit face weights this equals forman_edge + 3 * triangles_through_edge,
// exactly. Longer cycles are never treated as faces.
EdgeCurvatureVector augmented_forman_edge(const Graph& g,
                                          const FaceWeightFn& face_weight = {});

// vertex value = sum of incident edge values; isolated vertices get 0
VertexCurvatureVector curvature_vertex_sum(const Graph& g,
                                           const EdgeCurvatureVector& edge_curv);

inline VertexCurvatureVector forman_vertex(const Graph& g,
                                           const EdgeCurvatureVector& edge_curv) {
    return curvature_vertex_sum(g, edge_curv);
}

} // namespace netcurv
