#include "netcurv/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"
#include "netcurv/forman.hpp"
#include "netcurv/metrics.hpp"
#include "netcurv/parallel.hpp"

namespace netcurv {

namespace {

void check_columns(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("correlation: columns differ in length");
    if (xs.size() < 2)
        throw std::invalid_argument("correlation: need at least two observations");
}

// the workhorse; assumes lengths already checked
std::optional<double> pearson_unchecked(const std::vector<double>& xs,
                                        const std::vector<double>& ys) {
    size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double dx = xs[i] - mx, dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::optional<double> pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    check_columns(xs, ys);
    return pearson_unchecked(xs, ys);
}

std::vector<double> average_ranks(const std::vector<double>& xs) {
    size_t n = xs.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&xs](size_t a, size_t b) { return xs[a] < xs[b]; });
    std::vector<double> rank(n, 0.0);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && xs[order[j + 1]] == xs[order[i]]) ++j;
        double avg = 0.5 * static_cast<double>(i + j) + 1.0;  // 1-based
        for (size_t t = i; t <= j; ++t) rank[order[t]] = avg;
        i = j + 1;
    }
    return rank;
}

std::optional<double> spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
    check_columns(xs, ys);
    return pearson_unchecked(average_ranks(xs), average_ranks(ys));
}

const char* scope_name(Scope scope) {
    return scope == Scope::EDGE ? "edge" : "vertex";
}

std::vector<std::string> known_metrics(Scope scope) {
    if (scope == Scope::EDGE)
        return {"or", "fr", "afr", "ebc", "embeddedness", "dispersion"};
    return {"or", "fr", "afr", "bc", "degree", "cc"};
}

std::vector<double> metric_column(const Graph& g, Scope scope, const std::string& name,
                                  const WalkKind& walk, int threads) {
    if (scope == Scope::EDGE) {
        if (name == "or") return ollivier_edge(g, walk, threads).values;
        if (name == "fr") return forman_edge(g).values;
        if (name == "afr") return augmented_forman_edge(g).values;
        if (name == "ebc") return edge_betweenness(g, threads);
        if (name == "embeddedness") return embeddedness(g);
        if (name == "dispersion") return dispersion(g);
    } else {
        if (name == "or") return curvature_vertex_sum(g, ollivier_edge(g, walk, threads)).values;
        if (name == "fr") return curvature_vertex_sum(g, forman_edge(g)).values;
        if (name == "afr") return curvature_vertex_sum(g, augmented_forman_edge(g)).values;
        if (name == "bc") return vertex_betweenness(g, threads);
        if (name == "degree") return degree_column(g);
        if (name == "cc") return clustering_coefficient(g);
    }
    throw std::invalid_argument("unknown " + std::string(scope_name(scope)) + " metric '" +
                                name + "'");
}

namespace {

void check_pair_names(Scope scope,
                      const std::vector<std::pair<std::string, std::string>>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("no metric pairs requested");
    auto known = known_metrics(scope);
    for (const auto& [a, b] : pairs)
        for (const std::string& name : {a, b})
            if (std::find(known.begin(), known.end(), name) == known.end())
                throw std::invalid_argument("unknown " + std::string(scope_name(scope)) +
                                            " metric '" + name + "'");
}

std::vector<std::string> union_names(const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::string> names;
    for (const auto& [a, b] : pairs)
        for (const std::string& name : {a, b})
            if (std::find(names.begin(), names.end(), name) == names.end())
                names.push_back(name);
    return names;
}

struct SampleCoefs {
    std::vector<std::optional<double>> pear, spear;
};

// correlations of all pairs on one graph; too-short columns count as NA just
// like zero variance (a two-vertex component has nothing to correlate)
SampleCoefs sample_coefficients(const Graph& g, Scope scope,
                                const std::vector<std::pair<std::string, std::string>>& pairs,
                                const WalkKind& walk, int threads) {
    std::unordered_map<std::string, std::vector<double>> columns;
    for (const std::string& name : union_names(pairs))
        columns.emplace(name, metric_column(g, scope, name, walk, threads));

    SampleCoefs out;
    out.pear.resize(pairs.size());
    out.spear.resize(pairs.size());
    for (size_t p = 0; p < pairs.size(); ++p) {
        const auto& xs = columns.at(pairs[p].first);
        const auto& ys = columns.at(pairs[p].second);
        if (xs.size() < 2) continue;  // NA
        out.pear[p] = pearson_unchecked(xs, ys);
        out.spear[p] = pearson_unchecked(average_ranks(xs), average_ranks(ys));
    }
    return out;
}

CorrelationReport reduce_samples(const std::string& network_id, Scope scope,
                                 const std::vector<std::pair<std::string, std::string>>& pairs,
                                 const std::vector<SampleCoefs>& samples) {
    CorrelationReport report;
    report.network_id = network_id;
    report.scope = scope;
    report.samples = static_cast<int>(samples.size());
    for (size_t p = 0; p < pairs.size(); ++p) {
        PairCorrelation pc;
        pc.metric_a = pairs[p].first;
        pc.metric_b = pairs[p].second;
        double sp = 0.0, ss = 0.0;
        int used = 0, na = 0;
        for (const SampleCoefs& s : samples) {
            if (s.pear[p] && s.spear[p]) {
                sp += *s.pear[p];
                ss += *s.spear[p];
                ++used;
            } else {
                ++na;
            }
        }
        pc.samples_used = used;
        pc.samples_na = na;
        if (used > 0) {
            pc.pearson_mean = sp / used;
            pc.spearman_mean = ss / used;
        }
        report.pairs.push_back(std::move(pc));
    }
    return report;
}

}  // namespace

CorrelationReport correlate_graph(const Graph& g, const std::string& network_id, Scope scope,
                                  const std::vector<std::pair<std::string, std::string>>& pairs,
                                  const WalkKind& walk, int threads) {
    check_pair_names(scope, pairs);
    std::vector<SampleCoefs> one{sample_coefficients(g, scope, pairs, walk, threads)};
    return reduce_samples(network_id, scope, pairs, one);
}

CorrelationReport ensemble_correlate(const GeneratorSpec& spec, int samples, Scope scope,
                                     const std::vector<std::pair<std::string, std::string>>& pairs,
                                     const WalkKind& walk, int threads) {
    if (samples < 1) throw std::invalid_argument("ensemble needs at least one sample");
    check_pair_names(scope, pairs);
    validate_generator_spec(spec);

    std::vector<SampleCoefs> coef(static_cast<size_t>(samples));
    parallel_for(samples, threads, [&](int i) {
        GeneratorSpec draw = spec;
        draw.seed = spec.seed + static_cast<std::uint64_t>(i);
        Graph lcc = largest_connected_component(generate(draw));
        coef[static_cast<size_t>(i)] = sample_coefficients(lcc, scope, pairs, walk, 1);
    });
    return reduce_samples(serialize_generator_spec(spec), scope, pairs, coef);
}

namespace {

// sum over ordered pairs of 1/d, zero for unreachable; the efficiency
// variants divide this by their own prefactor
double ordered_inverse_distance_sum(const Graph& g, int threads) {
    int n = g.vertex_count();
    std::vector<double> per_source(static_cast<size_t>(n), 0.0);
    parallel_chunks(n, 64, threads, [&](int begin, int end, int /*chunk*/) {
        std::vector<int> dist;
        std::vector<VertexId> queue;
        for (int s = begin; s < end; ++s) {
            bfs_fill(g, s, dist, queue);
            double acc = 0.0;
            for (int v = 0; v < n; ++v)
                if (dist[static_cast<size_t>(v)] > 0)
                    acc += 1.0 / static_cast<double>(dist[static_cast<size_t>(v)]);
            per_source[static_cast<size_t>(s)] = acc;
        }
    });
    double total = 0.0;
    for (double s : per_source) total += s;
    return total;
}

}  // namespace

double communication_efficiency(const Graph& g, int threads, EfficiencyNorm norm) {
    int n = g.vertex_count();
    if (n < 2) throw std::domain_error("efficiency needs at least two vertices");
    double total = ordered_inverse_distance_sum(g, threads);
    double pairs = static_cast<double>(n) * (n - 1);
    return norm == EfficiencyNorm::UNORDERED_PAIRS ? total / (2.0 * pairs) : total / pairs;
}

namespace {

std::vector<int> order_by_score(const std::vector<double>& score, bool ascending) {
    std::vector<int> ids(score.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        double sa = score[static_cast<size_t>(a)], sb = score[static_cast<size_t>(b)];
        if (sa != sb) return ascending ? sa < sb : sa > sb;
        return a < b;
    });
    return ids;
}

// scores for one strategy on the current graph; `ascending` reports which
// end gets removed first
std::vector<double> strategy_scores(const Graph& g, RemovalTarget target,
                                    const std::string& strategy, const WalkKind& walk,
                                    int threads, bool& ascending) {
    ascending = true;
    if (strategy == "or_increasing") {
        auto c = ollivier_edge(g, walk, threads);
        return target == RemovalTarget::EDGES ? c.values : curvature_vertex_sum(g, c).values;
    }
    if (strategy == "fr_increasing") {
        auto c = forman_edge(g);
        return target == RemovalTarget::EDGES ? c.values : curvature_vertex_sum(g, c).values;
    }
    if (strategy == "afr_increasing") {
        auto c = augmented_forman_edge(g);
        return target == RemovalTarget::EDGES ? c.values : curvature_vertex_sum(g, c).values;
    }
    ascending = false;
    if (target == RemovalTarget::EDGES) {
        if (strategy == "ebc_decreasing") return edge_betweenness(g, threads);
    } else {
        if (strategy == "bc_decreasing") return vertex_betweenness(g, threads);
        if (strategy == "degree_decreasing") return degree_column(g);
        if (strategy == "cc_decreasing") return clustering_coefficient(g);
    }
    throw std::invalid_argument("unknown removal strategy '" + strategy + "' for " +
                                (target == RemovalTarget::EDGES ? "edges" : "vertices"));
}

}  // namespace

std::vector<int> removal_ordering(const Graph& g, RemovalTarget target,
                                  const std::string& strategy, std::uint64_t seed,
                                  const WalkKind& walk, int threads) {
    int count = target == RemovalTarget::EDGES ? g.edge_count() : g.vertex_count();
    if (strategy == "random") {
        std::vector<int> ids(static_cast<size_t>(count));
        std::iota(ids.begin(), ids.end(), 0);
        std::mt19937_64 rng(seed);
        for (int i = count - 1; i > 0; --i) {
            int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
            std::swap(ids[static_cast<size_t>(i)], ids[static_cast<size_t>(j)]);
        }
        return ids;
    }
    bool ascending = true;
    std::vector<double> score = strategy_scores(g, target, strategy, walk, threads, ascending);
    return order_by_score(score, ascending);
}

namespace {

double curve_efficiency(const Graph& reduced, int original_n, const RemovalOptions& opt,
                        RemovalTarget target) {
    double total = ordered_inverse_distance_sum(reduced, opt.threads);
    int n = (target == RemovalTarget::VERTICES && opt.renormalize_vertices)
                ? reduced.vertex_count()
                : original_n;
    if (n < 2) return 0.0;
    double pairs = static_cast<double>(n) * (n - 1);
    return opt.norm == EfficiencyNorm::UNORDERED_PAIRS ? total / (2.0 * pairs) : total / pairs;
}

Graph drop_elements(const Graph& g, RemovalTarget target, const std::vector<char>& removed) {
    if (target == RemovalTarget::EDGES) return g.edge_subgraph(removed);
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!removed[static_cast<size_t>(v)]) keep.push_back(v);
    return g.induced_subgraph(keep);
}

}  // namespace

RemovalCurve removal_experiment(const Graph& g, RemovalTarget target,
                                const std::string& strategy, const RemovalOptions& opt) {
    if (opt.steps < 2) throw std::invalid_argument("need at least two removal fractions");
    if (g.vertex_count() < 2) throw std::domain_error("efficiency needs at least two vertices");

    int total_elems = target == RemovalTarget::EDGES ? g.edge_count() : g.vertex_count();
    RemovalCurve curve;
    curve.strategy = strategy;
    curve.seed = opt.seed;

    bool adaptive = opt.adaptive && strategy != "random";
    std::vector<int> ordering;
    if (!adaptive)
        ordering = removal_ordering(g, target, strategy, opt.seed, opt.walk, opt.threads);
    else
        (void)removal_ordering(g, target, strategy, opt.seed, opt.walk, 1);  // validates name

    std::vector<char> removed(static_cast<size_t>(total_elems), 0);
    int removed_count = 0;
    for (int t = 0; t < opt.steps; ++t) {
        double fraction = static_cast<double>(t) / (opt.steps - 1);
        int want = static_cast<int>(std::llround(fraction * total_elems));

        if (!adaptive) {
            while (removed_count < want)
                removed[static_cast<size_t>(ordering[static_cast<size_t>(removed_count++)])] = 1;
        } else if (want > removed_count) {
            // rank the surviving elements by the metric recomputed on the
            // current graph; reduced ids map back through the ascending
            // survivor list, so ties still break by original id
            Graph current = drop_elements(g, target, removed);
            std::vector<int> survivors;
            if (target == RemovalTarget::EDGES) {
                for (EdgeId e = 0; e < g.edge_count(); ++e)
                    if (!removed[static_cast<size_t>(e)]) survivors.push_back(e);
            } else {
                for (VertexId v = 0; v < g.vertex_count(); ++v)
                    if (!removed[static_cast<size_t>(v)]) survivors.push_back(v);
            }
            bool ascending = true;
            std::vector<double> score =
                strategy_scores(current, target, strategy, opt.walk, opt.threads, ascending);
            std::vector<int> local = order_by_score(score, ascending);
            for (int i = 0; removed_count < want && i < static_cast<int>(local.size()); ++i) {
                removed[static_cast<size_t>(survivors[static_cast<size_t>(local[static_cast<size_t>(i)])])] = 1;
                ++removed_count;
            }
        }

        Graph reduced = drop_elements(g, target, removed);
        curve.points.emplace_back(fraction,
                                  curve_efficiency(reduced, g.vertex_count(), opt, target));
    }
    return curve;
}

void write_correlation_csv(const CorrelationReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "network,scope,metric_a,metric_b,pearson,spearman,samples_used,samples_na\n";
    for (const PairCorrelation& pc : report.pairs) {
        out << report.network_id << ',' << scope_name(report.scope) << ',' << pc.metric_a << ','
            << pc.metric_b << ',' << (pc.pearson_mean ? format_value(*pc.pearson_mean) : "NA")
            << ',' << (pc.spearman_mean ? format_value(*pc.spearman_mean) : "NA") << ','
            << pc.samples_used << ',' << pc.samples_na << '\n';
    }
    if (!out.good()) throw std::runtime_error("failed writing output file: " + path);
}

std::string correlation_json(const CorrelationReport& report) {
    nlohmann::json j;
    j["network"] = report.network_id;
    j["scope"] = scope_name(report.scope);
    j["samples"] = report.samples;
    j["pairs"] = nlohmann::json::array();
    for (const PairCorrelation& pc : report.pairs) {
        nlohmann::json p;
        p["metric_a"] = pc.metric_a;
        p["metric_b"] = pc.metric_b;
        if (pc.pearson_mean) p["pearson"] = *pc.pearson_mean; else p["pearson"] = nullptr;
        if (pc.spearman_mean) p["spearman"] = *pc.spearman_mean; else p["spearman"] = nullptr;
        p["samples_used"] = pc.samples_used;
        p["samples_na"] = pc.samples_na;
        j["pairs"].push_back(std::move(p));
    }
    return j.dump(2);
}

void write_curves_csv(const std::vector<RemovalCurve>& curves, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "strategy,fraction,efficiency\n";
    for (const RemovalCurve& c : curves)
        for (const auto& [fraction, eff] : c.points)
            out << c.strategy << ',' << format_value(fraction) << ',' << format_value(eff)
                << '\n';
    if (!out.good()) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace netcurv
