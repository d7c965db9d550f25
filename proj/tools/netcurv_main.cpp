// Command-line front end: generate graphs, compute per-edge / per-vertex
// metric tables, correlate metrics over ensembles, run removal-robustness
// experiments, and rebuild the published comparison tables next to locally
// computed values. Exit codes: 0 ok, 1 usage error, 2 data/runtime error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "netcurv/analysis.hpp"
#include "netcurv/generators.hpp"
#include "netcurv/graph.hpp"
#include "netcurv/metrics.hpp"
#include "netcurv/ollivier.hpp"
#include "reference_tables.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace netcurv;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string opt_fmt(const std::optional<double>& v, const char* spec = "%.4f") {
    if (!v) return "NA";
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, *v);
    return buf;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        }
    }
    flush();
    return out;
}

bool contains(const std::vector<std::string>& names, const std::string& name) {
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::string metric_alias(const std::string& name) {
    if (name == "emb") return "embeddedness";
    if (name == "dis") return "dispersion";
    return name;
}

json spec_json(const GeneratorSpec& s) {
    json j{{"text", serialize_generator_spec(s)},
           {"family", family_name(s.family)},
           {"n", s.n},
           {"seed", s.seed}};
    switch (s.family) {
        case Family::ER: j["p"] = s.p; break;
        case Family::WS:
            j["k"] = s.k;
            j["beta"] = s.beta;
            break;
        case Family::BA:
            j["m"] = s.m;
            j["m0"] = s.m0 < 0 ? s.m : s.m0;
            break;
        case Family::HGG:
            j["k"] = s.k;
            j["gamma"] = s.gamma;
            j["temperature"] = s.temperature;
            break;
    }
    return j;
}

// A subcommand's network source: an edge-list file, a positional key=value
// spec, or generator flags. Exactly one form may be used.
struct NetSource {
    std::vector<std::string> tokens;
    std::string input, family;
    int n = 0, k = 0, m = 0, m0 = -1;
    double p = 0.0, beta = 0.0, gamma = 2.0, temperature = 0.0;
    CLI::App* cmd = nullptr;

    void attach(CLI::App* c, bool allow_input) {
        cmd = c;
        if (allow_input)
            c->add_option("--input", input, "edge-list file (one 'u v' pair per line)");
        c->add_option("spec", tokens, "generator spec as key=value tokens");
        c->add_option("--family", family, "generator family: er, ws, ba, hgg");
        c->add_option("--n", n, "vertex count");
        c->add_option("--p", p, "edge probability (er)");
        c->add_option("--k", k, "lattice degree (ws) / target mean degree (hgg)");
        c->add_option("--beta", beta, "rewiring probability (ws)");
        c->add_option("--m", m, "attachments per arriving vertex (ba)");
        c->add_option("--m0", m0, "seed clique size (ba; default m)");
        c->add_option("--gamma", gamma, "degree exponent (hgg)");
        c->add_option("--temperature", temperature, "temperature (hgg; only 0 supported)");
    }

    bool has_input() const { return cmd->count("--input") > 0; }
    bool has_generator() const { return !tokens.empty() || cmd->count("--family") > 0; }

    GeneratorSpec spec(std::uint64_t seed) const {
        if (!tokens.empty()) {
            if (cmd->count("--family") > 0)
                throw std::invalid_argument(
                    "give the generator as key=value tokens or as flags, not both");
            std::string text;
            bool has_seed = false;
            for (const auto& tok : tokens) {
                if (!text.empty()) text += ' ';
                text += tok;
                if (tok.rfind("seed=", 0) == 0) has_seed = true;
            }
            if (!has_seed) text += " seed=" + std::to_string(seed);
            return parse_generator_spec(text);
        }
        if (cmd->count("--family") == 0)
            throw std::invalid_argument("no generator family given (use --family or key=value tokens)");
        std::string text = "family=" + family + " n=" + std::to_string(n);
        auto add_int = [&](const char* flag, const char* key, int value) {
            if (cmd->count(flag) > 0) text += std::string(" ") + key + "=" + std::to_string(value);
        };
        auto add_dbl = [&](const char* flag, const char* key, double value) {
            if (cmd->count(flag) > 0) text += std::string(" ") + key + "=" + fmt17(value);
        };
        add_dbl("--p", "p", p);
        add_int("--k", "k", k);
        add_dbl("--beta", "beta", beta);
        add_int("--m", "m", m);
        add_int("--m0", "m0", m0);
        add_dbl("--gamma", "gamma", gamma);
        add_dbl("--temperature", "temperature", temperature);
        text += " seed=" + std::to_string(seed);
        return parse_generator_spec(text);
    }
};

struct LoadedNetwork {
    Graph g;  // largest connected component
    std::string id;
    json source;
};

Graph take_lcc(const Graph& raw, const std::string& what) {
    Graph lcc = largest_connected_component(raw);
    if (lcc.vertex_count() != raw.vertex_count())
        std::fprintf(stderr,
                     "note: %s is disconnected; using its largest connected component "
                     "(%d of %d vertices, %d of %d edges)\n",
                     what.c_str(), lcc.vertex_count(), raw.vertex_count(),
                     static_cast<int>(lcc.edge_count()), static_cast<int>(raw.edge_count()));
    return lcc;
}

LoadedNetwork load_network(const NetSource& src, std::uint64_t seed) {
    if (src.has_input() && src.has_generator())
        throw std::invalid_argument("give --input or a generator spec, not both");
    if (src.has_input()) {
        Graph raw = read_edge_list(src.input);
        return {take_lcc(raw, src.input), src.input, json{{"input", src.input}}};
    }
    if (!src.has_generator())
        throw std::invalid_argument("no network given: use --input PATH or a generator spec");
    GeneratorSpec spec = src.spec(seed);
    std::string id = serialize_generator_spec(spec);
    Graph raw = generate(spec);
    return {take_lcc(raw, id), id, json{{"generator", spec_json(spec)}}};
}

void check_idleness(double idleness) {
    if (idleness != 0.0 && idleness != 0.5)
        throw std::invalid_argument("--idleness must be 0 or 0.5");
}

EfficiencyNorm parse_norm(const std::string& name) {
    if (name == "paper") return EfficiencyNorm::UNORDERED_PAIRS;
    if (name == "ordered") return EfficiencyNorm::ORDERED_PAIRS;
    throw std::invalid_argument("--normalize-efficiency must be 'paper' or 'ordered'");
}

bool parse_switch(const std::string& value, const char* flag) {
    if (value == "on") return true;
    if (value == "off") return false;
    throw std::invalid_argument(std::string(flag) + " must be 'off' or 'on'");
}

// ---------------------------------------------------------------- generate

int cmd_generate(const NetSource& src, std::uint64_t seed, const std::string& out_dir) {
    GeneratorSpec spec = src.spec(seed);
    Graph g = generate(spec);
    fs::create_directories(out_dir);
    const std::string graph_path = (fs::path(out_dir) / "graph.txt").string();
    const std::string sidecar_path = (fs::path(out_dir) / "graph.json").string();
    write_edge_list(g, graph_path);
    json sidecar{{"command", "generate"},
                 {"spec", spec_json(spec)},
                 {"seed", spec.seed},
                 {"vertices", g.vertex_count()},
                 {"edges", g.edge_count()},
                 {"graph_file", "graph.txt"}};
    write_text(sidecar_path, sidecar.dump(2) + "\n");
    std::printf("%s -> %s (n=%d, m=%d)\n", serialize_generator_spec(spec).c_str(),
                graph_path.c_str(), g.vertex_count(), static_cast<int>(g.edge_count()));
    return 0;
}

// ----------------------------------------------------------------- compute

struct MetricSelection {
    std::vector<std::string> edge, vertex;
};

MetricSelection resolve_metrics(const std::string& flag) {
    const auto edge_known = known_metrics(Scope::EDGE);
    const auto vertex_known = known_metrics(Scope::VERTEX);
    MetricSelection sel;
    if (flag.empty()) {
        sel.edge = edge_known;
        sel.vertex = vertex_known;
        return sel;
    }
    for (const auto& raw : split_list(flag)) {
        const std::string name = metric_alias(raw);
        const bool e = contains(edge_known, name);
        const bool v = contains(vertex_known, name);
        if (!e && !v) throw std::invalid_argument("unknown metric: " + raw);
        if (e && !contains(sel.edge, name)) sel.edge.push_back(name);
        if (v && !contains(sel.vertex, name)) sel.vertex.push_back(name);
    }
    return sel;
}

int cmd_compute(const NetSource& src, std::uint64_t seed, double idleness,
                const std::string& metrics_flag, int threads, const std::string& out_dir) {
    check_idleness(idleness);
    const WalkKind walk{idleness};
    const MetricSelection sel = resolve_metrics(metrics_flag);
    LoadedNetwork net = load_network(src, seed);
    std::printf("network: %s (n=%d, m=%d)\n", net.id.c_str(), net.g.vertex_count(),
                static_cast<int>(net.g.edge_count()));

    MetricTable table;
    table.network_id = net.id;
    auto compute_scope = [&](Scope scope, const std::vector<std::string>& names) {
        for (const auto& name : names) {
            Timer timer;
            std::vector<double> col = metric_column(net.g, scope, name, walk, threads);
            std::printf("  %-6s %-13s %9.3f s\n", scope_name(scope), name.c_str(),
                        timer.seconds());
            if (scope == Scope::EDGE)
                table.add_edge_column(net.g, name, std::move(col));
            else
                table.add_vertex_column(net.g, name, std::move(col));
        }
    };
    compute_scope(Scope::EDGE, sel.edge);
    compute_scope(Scope::VERTEX, sel.vertex);

    fs::create_directories(out_dir);
    json files = json::array();
    if (!sel.edge.empty()) {
        const std::string path = (fs::path(out_dir) / "edges.csv").string();
        write_edge_csv(net.g, table, path);
        files.push_back("edges.csv");
        std::printf("wrote %s\n", path.c_str());
    }
    if (!sel.vertex.empty()) {
        const std::string path = (fs::path(out_dir) / "vertices.csv").string();
        write_vertex_csv(net.g, table, path);
        files.push_back("vertices.csv");
        std::printf("wrote %s\n", path.c_str());
    }
    json sidecar{{"command", "compute"},
                 {"source", net.source},
                 {"idleness", idleness},
                 {"metrics", json{{"edge", sel.edge}, {"vertex", sel.vertex}}},
                 {"network", json{{"id", net.id},
                                  {"vertices", net.g.vertex_count()},
                                  {"edges", net.g.edge_count()}}},
                 {"files", files}};
    write_text((fs::path(out_dir) / "run.json").string(), sidecar.dump(2) + "\n");
    return 0;
}

// --------------------------------------------------------------- correlate

std::vector<std::pair<std::string, std::string>> scope_pairs(Scope scope,
                                                             const std::string& metrics_flag,
                                                             bool explicit_scope) {
    const auto known = known_metrics(scope);
    std::vector<std::string> names;
    if (metrics_flag.empty()) {
        names = known;
    } else {
        for (const auto& raw : split_list(metrics_flag)) {
            const std::string name = metric_alias(raw);
            if (!contains(known_metrics(Scope::EDGE), name) &&
                !contains(known_metrics(Scope::VERTEX), name))
                throw std::invalid_argument("unknown metric: " + raw);
            if (contains(known, name) && !contains(names, name)) names.push_back(name);
        }
    }
    if (names.size() < 2) {
        if (explicit_scope)
            throw std::invalid_argument(std::string("need at least two ") + scope_name(scope) +
                                        "-scope metrics to correlate");
        return {};
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j) pairs.emplace_back(names[i], names[j]);
    return pairs;
}

void print_report(const CorrelationReport& report) {
    for (const auto& pc : report.pairs)
        std::printf("  %-6s %-4s ~ %-13s spearman %8s   pearson %8s   (used %d, na %d)\n",
                    scope_name(report.scope), pc.metric_a.c_str(), pc.metric_b.c_str(),
                    opt_fmt(pc.spearman_mean).c_str(), opt_fmt(pc.pearson_mean).c_str(),
                    pc.samples_used, pc.samples_na);
}

int cmd_correlate(const NetSource& src, std::uint64_t seed, double idleness, int samples,
                  bool samples_given, const std::string& scope_flag,
                  const std::string& metrics_flag, int threads, const std::string& out_dir) {
    check_idleness(idleness);
    if (samples < 1) throw std::invalid_argument("--samples must be >= 1");
    const WalkKind walk{idleness};

    std::vector<Scope> scopes;
    if (scope_flag == "edge")
        scopes = {Scope::EDGE};
    else if (scope_flag == "vertex")
        scopes = {Scope::VERTEX};
    else if (scope_flag == "both")
        scopes = {Scope::EDGE, Scope::VERTEX};
    else
        throw std::invalid_argument("--scope must be edge, vertex, or both");
    const bool explicit_scope = scopes.size() == 1;

    const bool ensemble = !src.has_input();
    json source;
    std::optional<LoadedNetwork> net;
    GeneratorSpec spec;
    if (ensemble) {
        if (!src.has_generator())
            throw std::invalid_argument("no network given: use --input PATH or a generator spec");
        spec = src.spec(seed);
        source = json{{"generator", spec_json(spec)}, {"samples", samples}};
        std::printf("ensemble: %s, %d samples (seeds %llu..%llu)\n",
                    serialize_generator_spec(spec).c_str(), samples,
                    static_cast<unsigned long long>(spec.seed),
                    static_cast<unsigned long long>(spec.seed + samples - 1));
    } else {
        if (samples_given && samples != 1)
            throw std::invalid_argument("--samples needs a generator spec, not --input");
        samples = 1;
        net = load_network(src, seed);
        source = net->source;
        std::printf("network: %s (n=%d, m=%d)\n", net->id.c_str(), net->g.vertex_count(),
                    static_cast<int>(net->g.edge_count()));
    }

    fs::create_directories(out_dir);
    json reports = json::object();
    json files = json::array();
    for (Scope scope : scopes) {
        const auto pairs = scope_pairs(scope, metrics_flag, explicit_scope);
        if (pairs.empty()) {
            std::fprintf(stderr, "notice: fewer than two %s-scope metrics selected; scope skipped\n",
                         scope_name(scope));
            continue;
        }
        CorrelationReport report =
            ensemble ? ensemble_correlate(spec, samples, scope, pairs, walk, threads)
                     : correlate_graph(net->g, net->id, scope, pairs, walk, threads);
        print_report(report);
        const std::string file = std::string("correlations_") + scope_name(scope) + ".csv";
        write_correlation_csv(report, (fs::path(out_dir) / file).string());
        reports[scope_name(scope)] = json::parse(correlation_json(report));
        files.push_back(file);
    }
    if (files.empty()) throw std::invalid_argument("no scope had two metrics to correlate");

    json sidecar{{"command", "correlate"}, {"source", source},       {"seed", seed},
                 {"idleness", idleness},   {"samples", samples},     {"files", files},
                 {"reports", reports}};
    write_text((fs::path(out_dir) / "run.json").string(), sidecar.dump(2) + "\n");
    std::printf("wrote %s\n", (fs::path(out_dir) / "run.json").string().c_str());
    return 0;
}

// -------------------------------------------------------------- robustness

int cmd_robustness(const NetSource& src, std::uint64_t seed, double idleness, int samples,
                   const std::string& target_flag, const std::string& strategies_flag, int steps,
                   const std::string& norm_flag, const std::string& adaptive_flag,
                   const std::string& renorm_flag, int threads, const std::string& out_dir) {
    check_idleness(idleness);
    if (samples < 1) throw std::invalid_argument("--samples must be >= 1");

    RemovalTarget target;
    if (target_flag == "edges")
        target = RemovalTarget::EDGES;
    else if (target_flag == "vertices")
        target = RemovalTarget::VERTICES;
    else
        throw std::invalid_argument("--target must be edges or vertices");

    std::vector<std::string> strategies = split_list(strategies_flag);
    if (strategies.empty()) {
        strategies = {"random", "or_increasing", "fr_increasing", "afr_increasing"};
        if (target == RemovalTarget::EDGES) {
            strategies.push_back("ebc_decreasing");
        } else {
            strategies.push_back("bc_decreasing");
            strategies.push_back("degree_decreasing");
            strategies.push_back("cc_decreasing");
        }
    }

    RemovalOptions opt;
    opt.steps = steps;
    opt.seed = seed;
    opt.walk = WalkKind{idleness};
    opt.adaptive = parse_switch(adaptive_flag, "--adaptive-removal");
    opt.norm = parse_norm(norm_flag);
    opt.renormalize_vertices = parse_switch(renorm_flag, "--renormalize-vertices");
    opt.threads = threads;

    std::vector<RemovalCurve> curves;
    json source;
    if (src.has_input() || samples == 1) {
        if (src.has_input() && samples != 1)
            throw std::invalid_argument("--samples needs a generator spec, not --input");
        LoadedNetwork net = load_network(src, seed);
        source = net.source;
        std::printf("network: %s (n=%d, m=%d)\n", net.id.c_str(), net.g.vertex_count(),
                    static_cast<int>(net.g.edge_count()));
        for (const auto& strategy : strategies)
            curves.push_back(removal_experiment(net.g, target, strategy, opt));
    } else {
        GeneratorSpec spec = src.spec(seed);
        source = json{{"generator", spec_json(spec)}, {"samples", samples}};
        std::printf("ensemble: %s, %d samples, mean curves\n",
                    serialize_generator_spec(spec).c_str(), samples);
        std::vector<std::vector<double>> sums(strategies.size());
        std::vector<double> fractions;
        for (int i = 0; i < samples; ++i) {
            GeneratorSpec draw = spec;
            draw.seed = spec.seed + static_cast<std::uint64_t>(i);
            Graph g = largest_connected_component(generate(draw));
            RemovalOptions per = opt;
            per.seed = draw.seed;
            for (size_t si = 0; si < strategies.size(); ++si) {
                RemovalCurve c = removal_experiment(g, target, strategies[si], per);
                if (sums[si].empty()) sums[si].assign(c.points.size(), 0.0);
                for (size_t t = 0; t < c.points.size(); ++t) sums[si][t] += c.points[t].second;
                if (fractions.empty())
                    for (const auto& pt : c.points) fractions.push_back(pt.first);
            }
        }
        for (size_t si = 0; si < strategies.size(); ++si) {
            RemovalCurve mean;
            mean.strategy = strategies[si];
            mean.seed = seed;
            for (size_t t = 0; t < sums[si].size(); ++t)
                mean.points.emplace_back(fractions[t], sums[si][t] / samples);
            curves.push_back(std::move(mean));
        }
    }

    for (const auto& c : curves)
        std::printf("  %-16s efficiency %.6f -> %.6f over %zu fractions\n", c.strategy.c_str(),
                    c.points.front().second, c.points.back().second, c.points.size());

    fs::create_directories(out_dir);
    const std::string curves_path = (fs::path(out_dir) / "robustness.csv").string();
    write_curves_csv(curves, curves_path);
    json sidecar{{"command", "robustness"},
                 {"source", source},
                 {"seed", seed},
                 {"idleness", idleness},
                 {"samples", samples},
                 {"target", target_flag},
                 {"strategies", strategies},
                 {"steps", steps},
                 {"normalize_efficiency", norm_flag},
                 {"adaptive_removal", adaptive_flag},
                 {"renormalize_vertices", renorm_flag},
                 {"files", json::array({"robustness.csv"})}};
    write_text((fs::path(out_dir) / "run.json").string(), sidecar.dump(2) + "\n");
    std::printf("wrote %s\n", curves_path.c_str());
    return 0;
}

// ---------------------------------------------------------- reproduce-table

int cmd_reproduce_table(std::string table_name, int samples, std::uint64_t seed, double idleness,
                        int threads, const std::string& data_dir, const std::string& out_dir) {
    check_idleness(idleness);
    if (samples < 1) throw std::invalid_argument("--samples must be >= 1");
    std::transform(table_name.begin(), table_name.end(), table_name.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    const ReferenceTable* table = nullptr;
    for (const auto& t : reference_tables())
        if (table_name == t.name) table = &t;
    if (!table) throw std::invalid_argument("unknown table '" + table_name + "' (use I, II, III, or IV)");

    const WalkKind walk{idleness};
    std::printf("table %s  (%s scope, spearman rank correlation, published vs computed)\n",
                table->name, scope_name(table->scope));
    std::printf("samples=%d seed=%llu idleness=%g\n\n", samples,
                static_cast<unsigned long long>(seed), idleness);
    std::printf("%-28s %-20s %10s %10s %8s\n", "network", "pair", "published", "computed",
                "|diff|");

    std::string csv = "network,metric_a,metric_b,published,computed,abs_diff,pearson,"
                      "samples_used,samples_na\n";
    json rows = json::array();
    json skipped = json::array();
    int computed_rows = 0;

    for (size_t ri = 0; ri < table->rows.size(); ++ri) {
        const ReferenceRow& row = table->rows[ri];
        CorrelationReport report;
        json row_source;
        Timer timer;
        if (row.spec) {
            GeneratorSpec spec = parse_generator_spec(row.spec);
            spec.seed = seed;
            report = ensemble_correlate(spec, samples, table->scope, table->pairs, walk, threads);
            row_source = json{{"generator", spec_json(spec)}, {"samples", samples}};
        } else {
            const fs::path path = fs::path(data_dir) / row.dataset;
            if (!fs::exists(path)) {
                std::fprintf(stderr, "notice: dataset for '%s' not found at %s; row skipped\n",
                             row.label, path.string().c_str());
                skipped.push_back(json{{"network", row.label}, {"dataset", row.dataset}});
                continue;
            }
            Graph lcc = take_lcc(read_edge_list(path.string()), row.label);
            report = correlate_graph(lcc, row.label, table->scope, table->pairs, walk, threads);
            row_source = json{{"dataset", row.dataset}};
        }
        std::fprintf(stderr, "[%zu/%zu] %s done in %.1f s\n", ri + 1, table->rows.size(),
                     row.label, timer.seconds());

        json pairs_json = json::array();
        for (size_t pi = 0; pi < table->pairs.size(); ++pi) {
            const PairCorrelation& pc = report.pairs[pi];
            const double published = row.published[pi];
            const std::string pair_label = pc.metric_a + "~" + pc.metric_b;
            std::string computed = "NA", diff = "NA";
            if (pc.spearman_mean) {
                computed = fmt17(*pc.spearman_mean);
                diff = fmt17(std::abs(*pc.spearman_mean - published));
            }
            csv += std::string(row.label) + "," + pc.metric_a + "," + pc.metric_b + "," +
                   fmt2(published) + "," + computed + "," + diff + "," +
                   (pc.pearson_mean ? fmt17(*pc.pearson_mean) : "NA") + "," +
                   std::to_string(pc.samples_used) + "," + std::to_string(pc.samples_na) + "\n";
            std::printf("%-28s %-20s %10s %10s %8s\n", row.label, pair_label.c_str(),
                        fmt2(published).c_str(), opt_fmt(pc.spearman_mean, "%.2f").c_str(),
                        pc.spearman_mean ? fmt2(std::abs(*pc.spearman_mean - published)).c_str()
                                         : "NA");
            pairs_json.push_back(json{
                {"metric_a", pc.metric_a},
                {"metric_b", pc.metric_b},
                {"published", published},
                {"spearman", pc.spearman_mean ? json(*pc.spearman_mean) : json(nullptr)},
                {"pearson", pc.pearson_mean ? json(*pc.pearson_mean) : json(nullptr)},
                {"samples_used", pc.samples_used},
                {"samples_na", pc.samples_na}});
        }
        rows.push_back(json{{"network", row.label}, {"source", row_source}, {"pairs", pairs_json}});
        ++computed_rows;
    }

    std::printf("\nrows: %d computed, %zu skipped (datasets not found)\n", computed_rows,
                skipped.size());

    fs::create_directories(out_dir);
    const std::string csv_path =
        (fs::path(out_dir) / ("table_" + std::string(table->name) + ".csv")).string();
    write_text(csv_path, csv);
    json sidecar{{"command", "reproduce-table"},
                 {"table", table->name},
                 {"scope", scope_name(table->scope)},
                 {"samples", samples},
                 {"seed", seed},
                 {"idleness", idleness},
                 {"rows", rows},
                 {"skipped", skipped}};
    write_text(
        (fs::path(out_dir) / ("table_" + std::string(table->name) + ".json")).string(),
        sidecar.dump(2) + "\n");
    std::printf("wrote %s\n", csv_path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph curvature toolkit: edge/vertex curvatures, classical metrics, "
                 "ensemble correlations, and removal-robustness experiments"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "draw a random graph and write it with a sidecar");
    NetSource gen_src;
    gen_src.attach(gen, /*allow_input=*/false);
    std::uint64_t gen_seed = 42;
    std::string gen_out = ".";
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output directory");

    // compute
    auto* comp = app.add_subcommand("compute", "compute per-edge / per-vertex metric tables");
    NetSource comp_src;
    comp_src.attach(comp, /*allow_input=*/true);
    std::uint64_t comp_seed = 42;
    double comp_idleness = 0.5;
    std::string comp_metrics, comp_out = ".";
    int comp_threads = 0;
    comp->add_option("--seed", comp_seed, "generator seed (generator input only)");
    comp->add_option("--idleness", comp_idleness, "random-walk idleness: 0 or 0.5");
    comp->add_option("--metrics", comp_metrics,
                     "comma list of or,fr,afr,ebc,embeddedness,dispersion,degree,bc,cc "
                     "(default: all)");
    comp->add_option("--threads", comp_threads, "worker threads (0 = all cores)");
    comp->add_option("--out", comp_out, "output directory");

    // correlate
    auto* corr = app.add_subcommand("correlate", "correlate metric pairs on a network or ensemble");
    NetSource corr_src;
    corr_src.attach(corr, /*allow_input=*/true);
    std::uint64_t corr_seed = 42;
    double corr_idleness = 0.5;
    int corr_samples = 100, corr_threads = 0;
    std::string corr_scope = "both", corr_metrics, corr_out = ".";
    corr->add_option("--seed", corr_seed, "base seed; sample i uses seed+i");
    corr->add_option("--idleness", corr_idleness, "random-walk idleness: 0 or 0.5");
    auto* corr_samples_opt =
        corr->add_option("--samples", corr_samples, "ensemble size (generator input only)");
    corr->add_option("--scope", corr_scope, "edge, vertex, or both");
    corr->add_option("--metrics", corr_metrics, "comma list; all pairs are correlated");
    corr->add_option("--threads", corr_threads, "worker threads (0 = all cores)");
    corr->add_option("--out", corr_out, "output directory");

    // robustness
    auto* rob = app.add_subcommand("robustness",
                                   "communication efficiency under progressive removal");
    NetSource rob_src;
    rob_src.attach(rob, /*allow_input=*/true);
    std::uint64_t rob_seed = 42;
    double rob_idleness = 0.5;
    int rob_samples = 1, rob_steps = 21, rob_threads = 0;
    std::string rob_target = "edges", rob_strategies, rob_norm = "paper";
    std::string rob_adaptive = "off", rob_renorm = "off", rob_out = ".";
    rob->add_option("--seed", rob_seed, "base seed (random strategy + generator)");
    rob->add_option("--idleness", rob_idleness, "random-walk idleness: 0 or 0.5");
    rob->add_option("--samples", rob_samples, "ensemble size; >1 writes mean curves");
    rob->add_option("--target", rob_target, "edges or vertices");
    rob->add_option("--strategies", rob_strategies,
                    "comma list (default: random + curvature-increasing + centrality)");
    rob->add_option("--steps", rob_steps, "recorded fractions, evenly spaced over [0,1]");
    rob->add_option("--normalize-efficiency", rob_norm, "paper (unordered pairs) or ordered");
    rob->add_option("--adaptive-removal", rob_adaptive, "off or on: recompute scores per step");
    rob->add_option("--renormalize-vertices", rob_renorm,
                    "off or on: shrink the efficiency prefactor as vertices go");
    rob->add_option("--threads", rob_threads, "worker threads (0 = all cores)");
    rob->add_option("--out", rob_out, "output directory");

    // reproduce-table
    auto* rep = app.add_subcommand("reproduce-table",
                                   "recompute a published comparison table side by side");
    std::string rep_table;
    int rep_samples = 100, rep_threads = 0;
    std::uint64_t rep_seed = 42;
    double rep_idleness = 0.5;
    std::string rep_data = "data", rep_out = ".";
    rep->add_option("table", rep_table, "table name: I, II, III, or IV")->required();
    rep->add_option("--samples", rep_samples, "ensemble size per model row");
    rep->add_option("--seed", rep_seed, "base seed; sample i uses seed+i");
    rep->add_option("--idleness", rep_idleness, "random-walk idleness: 0 or 0.5");
    rep->add_option("--data-dir", rep_data, "directory with real-network edge lists");
    rep->add_option("--threads", rep_threads, "worker threads (0 = all cores)");
    rep->add_option("--out", rep_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(gen)) return cmd_generate(gen_src, gen_seed, gen_out);
        if (app.got_subcommand(comp))
            return cmd_compute(comp_src, comp_seed, comp_idleness, comp_metrics, comp_threads,
                               comp_out);
        if (app.got_subcommand(corr))
            return cmd_correlate(corr_src, corr_seed, corr_idleness, corr_samples,
                                 corr_samples_opt->count() > 0, corr_scope, corr_metrics,
                                 corr_threads, corr_out);
        if (app.got_subcommand(rob))
            return cmd_robustness(rob_src, rob_seed, rob_idleness, rob_samples, rob_target,
                                  rob_strategies, rob_steps, rob_norm, rob_adaptive, rob_renorm,
                                  rob_threads, rob_out);
        if (app.got_subcommand(rep))
            return cmd_reproduce_table(rep_table, rep_samples, rep_seed, rep_idleness, rep_threads,
                                       rep_data, rep_out);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
