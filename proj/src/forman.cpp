#include "netcurv/forman.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace netcurv {

EdgeCurvatureVector forman_edge(const Graph& g) {
    EdgeCurvatureVector out;
    out.kind = CurvatureKind::FORMAN;
    out.values.resize(g.edge_count());

    if (g.has_unit_weights()) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const auto [u, v] = g.edge(e);
            long long f = 4 - static_cast<long long>(g.degree(u)) - g.degree(v);
            out.values[static_cast<size_t>(e)] = static_cast<double>(f);
        }
        return out;
    }

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        const double we = g.edge_weight(e);
        double penalty = 0.0;
        for (EdgeId eu : g.incident_edges(u))
            if (eu != e) penalty += g.vertex_weight(u) / std::sqrt(we * g.edge_weight(eu));
        for (EdgeId ev : g.incident_edges(v))
            if (ev != e) penalty += g.vertex_weight(v) / std::sqrt(we * g.edge_weight(ev));
        out.values[static_cast<size_t>(e)] =
            we * ((g.vertex_weight(u) + g.vertex_weight(v)) / we - penalty);
    }
    return out;
}

EdgeCurvatureVector augmented_forman_edge(const Graph& g, const FaceWeightFn& face_weight) {
    EdgeCurvatureVector out;
    out.kind = CurvatureKind::AUGMENTED_FORMAN;
    out.values.resize(g.edge_count());

    if (g.has_unit_weights() && !face_weight) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const auto [u, v] = g.edge(e);
            long long f = 4 - static_cast<long long>(g.degree(u)) - g.degree(v) +
                          3LL * triangles_through_edge(g, e);
            out.values[static_cast<size_t>(e)] = static_cast<double>(f);
        }
        return out;
    }

    auto face_w = [&](VertexId a, VertexId b, VertexId c) {
        if (!face_weight) return 1.0;
        double w = face_weight(a, b, c);
        if (!(w > 0.0)) throw std::domain_error("face weights must be strictly positive");
        return w;
    };
    auto sorted3 = [](VertexId a, VertexId b, VertexId c) {
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        return std::array<VertexId, 3>{a, b, c};
    };

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        const double we = g.edge_weight(e);

        // triangle faces containing e: common neighbors of its endpoints
        double face_term = 0.0;
        {
            auto a = g.neighbors(u);
            auto b = g.neighbors(v);
            size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] < b[j]) ++i;
                else if (a[i] > b[j]) ++j;
                else {
                    auto t = sorted3(u, v, a[i]);
                    face_term += we / face_w(t[0], t[1], t[2]);
                    ++i;
                    ++j;
                }
            }
        }

        // an incident edge that closes a triangle with e shares both a vertex
        // and a face, so it is not parallel and contributes nothing; the rest
        // contribute the shared vertex's weight
        double parallel_term = 0.0;
        auto add_parallels = [&](VertexId shared, VertexId other) {
            auto nbrs = g.neighbors(shared);
            auto inc = g.incident_edges(shared);
            for (size_t i = 0; i < nbrs.size(); ++i) {
                VertexId x = nbrs[i];
                if (x == other) continue;
                if (g.edge_id(x, other)) continue; // co-face edge
                parallel_term +=
                    g.vertex_weight(shared) / std::sqrt(we * g.edge_weight(inc[i]));
            }
        };
        add_parallels(u, v);
        add_parallels(v, u);

        out.values[static_cast<size_t>(e)] =
            we * (face_term + (g.vertex_weight(u) + g.vertex_weight(v)) / we - parallel_term);
    }
    return out;
}

VertexCurvatureVector curvature_vertex_sum(const Graph& g,
                                           const EdgeCurvatureVector& edge_curv) {
    if (static_cast<EdgeId>(edge_curv.values.size()) != g.edge_count())
        throw std::domain_error("edge curvature length does not match graph");
    VertexCurvatureVector out;
    out.kind = edge_curv.kind;
    out.values.assign(g.vertex_count(), 0.0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        out.values[u] += edge_curv.values[static_cast<size_t>(e)];
        out.values[v] += edge_curv.values[static_cast<size_t>(e)];
    }
    return out;
}

} // namespace netcurv
