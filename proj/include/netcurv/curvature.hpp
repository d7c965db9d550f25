#pragma once

#include <vector>

namespace netcurv {

enum class CurvatureKind { FORMAN, AUGMENTED_FORMAN, OLLIVIER };

// one value per edge id of the graph it was computed on
struct EdgeCurvatureVector {
    CurvatureKind kind;
    std::vector<double> values;
};

// one value per vertex id; a vertex value is the sum over incident edges
struct VertexCurvatureVector {
    CurvatureKind kind;
    std::vector<double> values;
};

} // namespace netcurv
