#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netcurv/generators.hpp"
#include "netcurv/graph.hpp"
#include "netcurv/ollivier.hpp"

namespace netcurv {

// Correlations of two equal-length columns (length >= 2). nullopt when a
// column has zero variance: the value is undefined and gets reported as NA
// downstream, never silently coerced to 0.
std::optional<double> pearson(const std::vector<double>& xs, const std::vector<double>& ys);
std::optional<double> spearman(const std::vector<double>& xs, const std::vector<double>& ys);

// 1-based ranks with ties averaged (the rank vector spearman correlates).
std::vector<double> average_ranks(const std::vector<double>& xs);

enum class Scope { EDGE, VERTEX };
const char* scope_name(Scope scope);

// Short metric names usable in correlation pairs. Edge scope: or, fr, afr,
// ebc, embeddedness, dispersion. Vertex scope: or, fr, afr, bc, degree, cc
// (curvatures at a vertex are the sums over its incident edges).
std::vector<std::string> known_metrics(Scope scope);
std::vector<double> metric_column(const Graph& g, Scope scope, const std::string& name,
                                  const WalkKind& walk, int threads = 1);

struct PairCorrelation {
    std::string metric_a, metric_b;
    std::optional<double> pearson_mean, spearman_mean;
    int samples_used = 0;
    int samples_na = 0;  // excluded for zero variance
};

struct CorrelationReport {
    std::string network_id;
    Scope scope = Scope::EDGE;
    int samples = 0;
    std::vector<PairCorrelation> pairs;
};

// Correlation pairs on one concrete network (its largest connected
// component is NOT taken implicitly — pass the graph you mean).
CorrelationReport correlate_graph(const Graph& g, const std::string& network_id, Scope scope,
                                  const std::vector<std::pair<std::string, std::string>>& pairs,
                                  const WalkKind& walk, int threads = 1);

// Draws `samples` networks from spec with seeds seed, seed+1, ..., computes
// each pair's correlation on every sample's largest connected component, and
// averages. Samples where a correlation is undefined are excluded from that
// pair's mean and counted in samples_na.
CorrelationReport ensemble_correlate(const GeneratorSpec& spec, int samples, Scope scope,
                                     const std::vector<std::pair<std::string, std::string>>& pairs,
                                     const WalkKind& walk, int threads = 1);

// Mean inverse shortest-path length. UNORDERED_PAIRS sums i<j and divides by
// n(n-1) (complete graph scores 1/2); ORDERED_PAIRS doubles it (max 1).
// Disconnected pairs contribute 0. n < 2 is a domain error.
enum class EfficiencyNorm { UNORDERED_PAIRS, ORDERED_PAIRS };
double communication_efficiency(const Graph& g, int threads = 1,
                                EfficiencyNorm norm = EfficiencyNorm::UNORDERED_PAIRS);

enum class RemovalTarget { EDGES, VERTICES };

struct RemovalCurve {
    std::string strategy;
    std::uint64_t seed = 0;
    std::vector<std::pair<double, double>> points;  // (fraction removed, efficiency)
};

struct RemovalOptions {
    int steps = 21;          // recorded fractions, evenly spaced over [0, 1]
    std::uint64_t seed = 0;  // consumed by the random strategy only
    WalkKind walk;           // walk for curvature-based orderings
    bool adaptive = false;   // recompute the ordering after each step
    EfficiencyNorm norm = EfficiencyNorm::UNORDERED_PAIRS;
    bool renormalize_vertices = false;  // shrink the prefactor as vertices go
    int threads = 1;
};

// Removal order over element ids, computed on the intact graph. Edge
// strategies: random, or_increasing, fr_increasing, afr_increasing,
// ebc_decreasing. Vertex strategies: random, or_increasing, fr_increasing,
// afr_increasing, bc_decreasing, degree_decreasing, cc_decreasing. Ties
// break by ascending element id.
std::vector<int> removal_ordering(const Graph& g, RemovalTarget target,
                                  const std::string& strategy, std::uint64_t seed,
                                  const WalkKind& walk, int threads = 1);

RemovalCurve removal_experiment(const Graph& g, RemovalTarget target,
                                const std::string& strategy, const RemovalOptions& opt);

void write_correlation_csv(const CorrelationReport& report, const std::string& path);
std::string correlation_json(const CorrelationReport& report);
void write_curves_csv(const std::vector<RemovalCurve>& curves, const std::string& path);

}  // namespace netcurv
