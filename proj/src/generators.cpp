#include "netcurv/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cctype>
#include <cstdio>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace netcurv {

namespace {

double uniform01(std::mt19937_64& rng) {
    // 53 random bits -> [0, 1); avoids std::uniform_real_distribution so the
    // stream is pinned down by us, not the standard library vendor
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int uniform_below(std::mt19937_64& rng, int n) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

std::string fmt_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::ER: return "er";
        case Family::WS: return "ws";
        case Family::BA: return "ba";
        case Family::HGG: return "hgg";
    }
    throw std::logic_error("unknown family enum value");
}

Family family_from_name(const std::string& name) {
    std::string s;
    s.reserve(name.size());
    for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "er") return Family::ER;
    if (s == "ws") return Family::WS;
    if (s == "ba") return Family::BA;
    if (s == "hgg") return Family::HGG;
    throw std::invalid_argument("unknown graph family '" + name + "' (expected er, ws, ba, or hgg)");
}

void validate_generator_spec(const GeneratorSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("n must be at least 1");
    switch (spec.family) {
        case Family::ER:
            if (!(spec.p >= 0.0 && spec.p <= 1.0))
                throw std::invalid_argument("edge probability p must lie in [0, 1]");
            break;
        case Family::WS:
            if (spec.k < 0 || spec.k % 2 != 0)
                throw std::invalid_argument("ring degree k must be even and nonnegative");
            if (spec.k >= spec.n)
                throw std::invalid_argument("ring degree k must be smaller than n");
            if (!(spec.beta >= 0.0 && spec.beta <= 1.0))
                throw std::invalid_argument("rewiring probability beta must lie in [0, 1]");
            break;
        case Family::BA: {
            int m0 = spec.m0 < 0 ? spec.m : spec.m0;
            if (spec.m < 1) throw std::invalid_argument("attachment count m must be at least 1");
            if (m0 < spec.m) throw std::invalid_argument("seed size m0 must be at least m");
            if (m0 >= spec.n) throw std::invalid_argument("seed size m0 must be smaller than n");
            break;
        }
        case Family::HGG:
            if (!(spec.gamma >= 2.0))
                throw std::invalid_argument("gamma must be at least 2");
            if (spec.temperature != 0.0)
                throw std::invalid_argument("nonzero temperature is not supported");
            if (spec.k < 1 || spec.k > spec.n - 1)
                throw std::invalid_argument("target mean degree k must lie in [1, n-1]");
            break;
    }
}

Graph generate(const GeneratorSpec& spec) {
    validate_generator_spec(spec);
    switch (spec.family) {
        case Family::ER: return generate_er(spec.n, spec.p, spec.seed);
        case Family::WS: return generate_ws(spec.n, spec.k, spec.beta, spec.seed);
        case Family::BA: return generate_ba(spec.n, spec.m, spec.m0 < 0 ? spec.m : spec.m0, spec.seed);
        case Family::HGG:
            return generate_hgg(spec.n, spec.k, spec.gamma, spec.temperature, spec.seed);
    }
    throw std::logic_error("unknown family enum value");
}

Graph generate_er(int n, double p, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.family = Family::ER;
    spec.n = n;
    spec.p = p;
    validate_generator_spec(spec);

    std::mt19937_64 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (uniform01(rng) < p) edges.emplace_back(i, j);
    return Graph::on_vertices(n, edges);
}

Graph generate_ws(int n, int k, double beta, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.family = Family::WS;
    spec.n = n;
    spec.k = k;
    spec.beta = beta;
    validate_generator_spec(spec);

    std::mt19937_64 rng(seed);
    auto key = [n](int a, int b) {
        if (a > b) std::swap(a, b);
        return static_cast<std::int64_t>(a) * n + b;
    };

    std::unordered_set<std::int64_t> present;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= k / 2; ++j) {
            int far = (i + j) % n;
            edges.emplace_back(i, far);
            present.insert(key(i, far));
        }

    // replace the far endpoint of each lattice edge with prob beta; the edge
    // under replacement is pulled out of the set first, so redrawing the same
    // endpoint just keeps it
    for (auto& [near, far] : edges) {
        if (beta == 0.0 || uniform01(rng) >= beta) continue;
        present.erase(key(near, far));
        int chosen = far;
        for (int attempt = 0; attempt < n; ++attempt) {
            int r = uniform_below(rng, n);
            if (r == near || present.count(key(near, r))) continue;
            chosen = r;
            break;
        }
        present.insert(key(near, chosen));
        far = chosen;
    }
    return Graph::on_vertices(n, edges);
}

Graph generate_ba(int n, int m, int m0, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.family = Family::BA;
    spec.n = n;
    spec.m = m;
    spec.m0 = m0;
    validate_generator_spec(spec);

    std::mt19937_64 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<VertexId> urn;  // each vertex appears once per incident edge
    urn.reserve(static_cast<size_t>(2) * (static_cast<size_t>(m) * n + 1));
    for (int i = 0; i < m0; ++i)
        for (int j = i + 1; j < m0; ++j) {
            edges.emplace_back(i, j);
            urn.push_back(i);
            urn.push_back(j);
        }

    std::vector<VertexId> chosen;
    for (int v = m0; v < n; ++v) {
        chosen.clear();
        while (static_cast<int>(chosen.size()) < m) {
            VertexId t = -1;
            if (urn.empty()) {
                // isolated seed (m0 == 1): nothing has degree yet
                t = uniform_below(rng, v);
            } else {
                for (int attempt = 0; attempt < 64; ++attempt) {
                    VertexId cand = urn[rng() % urn.size()];
                    if (std::find(chosen.begin(), chosen.end(), cand) == chosen.end()) {
                        t = cand;
                        break;
                    }
                }
                if (t < 0) {
                    // pathological streak of repeats: take the lowest vertex
                    // not picked yet so the draw always terminates
                    for (VertexId cand = 0; cand < v; ++cand)
                        if (std::find(chosen.begin(), chosen.end(), cand) == chosen.end()) {
                            t = cand;
                            break;
                        }
                }
            }
            chosen.push_back(t);
        }
        for (VertexId t : chosen) {
            edges.emplace_back(t, v);
            urn.push_back(t);
            urn.push_back(v);
        }
    }
    return Graph::on_vertices(n, edges);
}

bool hyperbolic_connected(double r1, double t1, double r2, double t2, double radius) {
    double cosh_d = std::cosh(r1) * std::cosh(r2) -
                    std::sinh(r1) * std::sinh(r2) * std::cos(t1 - t2);
    return cosh_d <= std::cosh(radius);
}

namespace {

struct DiskPoints {
    std::vector<double> cosh_r, sinh_r, theta;
};

DiskPoints sample_disk(int n, double alpha, double radius, std::mt19937_64& rng,
                       bool stratified_radii) {
    DiskPoints pts;
    pts.cosh_r.resize(static_cast<size_t>(n));
    pts.sinh_r.resize(static_cast<size_t>(n));
    pts.theta.resize(static_cast<size_t>(n));
    double span = std::cosh(alpha * radius) - 1.0;
    for (int i = 0; i < n; ++i) {
        // inverse CDF of the density alpha*sinh(alpha*r)/(cosh(alpha*R)-1);
        // calibration samples stratify the CDF coordinate because the mean
        // degree is dominated by how central the innermost points land — iid
        // draws would need hundreds of samples to average that hub noise out
        double u = stratified_radii ? (i + uniform01(rng)) / n : uniform01(rng);
        double r = std::acosh(1.0 + u * span) / alpha;
        pts.cosh_r[static_cast<size_t>(i)] = std::cosh(r);
        pts.sinh_r[static_cast<size_t>(i)] = std::sinh(r);
        pts.theta[static_cast<size_t>(i)] = 2.0 * std::acos(-1.0) * uniform01(rng);
    }
    return pts;
}

std::vector<std::pair<VertexId, VertexId>> disk_edges(const DiskPoints& pts, double radius) {
    int n = static_cast<int>(pts.theta.size());
    double cosh_R = std::cosh(radius);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i) {
        size_t si = static_cast<size_t>(i);
        for (int j = i + 1; j < n; ++j) {
            size_t sj = static_cast<size_t>(j);
            double cosh_d = pts.cosh_r[si] * pts.cosh_r[sj] -
                            pts.sinh_r[si] * pts.sinh_r[sj] *
                                std::cos(pts.theta[si] - pts.theta[sj]);
            if (cosh_d <= cosh_R) edges.emplace_back(i, j);
        }
    }
    return edges;
}

double calibration_mean_degree(int n, double alpha, double radius) {
    constexpr int kSamples = 12;
    double total = 0.0;
    for (int s = 0; s < kSamples; ++s) {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(s));
        DiskPoints pts = sample_disk(n, alpha, radius, rng, true);
        total += 2.0 * static_cast<double>(disk_edges(pts, radius).size()) / n;
    }
    return total / kSamples;
}

// mean degree falls as the disk grows, so bisect R until the calibration
// ensemble lands on the target; cached because every draw of an ensemble
// shares the same (n, k, gamma)
double calibrated_radius(int n, double k_target, double gamma) {
    static std::mutex mu;
    static std::map<std::tuple<int, double, double>, double> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(n, k_target, gamma);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    double alpha = (gamma - 1.0) / 2.0;
    double lo = 1e-3;
    if (calibration_mean_degree(n, alpha, lo) < k_target)
        throw std::runtime_error("target mean degree is too large for a hyperbolic disk");
    double hi = 1.0;
    int guard = 0;
    while (calibration_mean_degree(n, alpha, hi) > k_target) {
        hi *= 2.0;
        if (++guard > 64) throw std::runtime_error("disk radius search failed to bracket the target");
    }
    for (int iter = 0; iter < 50 && hi - lo > 1e-9 * hi; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (calibration_mean_degree(n, alpha, mid) > k_target)
            lo = mid;
        else
            hi = mid;
    }
    double radius = 0.5 * (lo + hi);
    cache.emplace(key, radius);
    return radius;
}

}  // namespace

Graph generate_hgg(int n, double k_target, double gamma, double temperature,
                   std::uint64_t seed) {
    GeneratorSpec spec;
    spec.family = Family::HGG;
    spec.n = n;
    spec.k = static_cast<int>(k_target);
    spec.gamma = gamma;
    spec.temperature = temperature;
    validate_generator_spec(spec);
    if (!(k_target > 0.0) || k_target > n - 1)
        throw std::invalid_argument("target mean degree k must lie in [1, n-1]");

    double radius = calibrated_radius(n, k_target, gamma);
    std::mt19937_64 rng(seed);
    DiskPoints pts = sample_disk(n, (gamma - 1.0) / 2.0, radius, rng, false);
    return Graph::on_vertices(n, disk_edges(pts, radius));
}

namespace {

long long parse_int(const std::string& key, const std::string& value) {
    long long out = 0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || p != value.data() + value.size())
        throw std::invalid_argument("value for '" + key + "' is not an integer: " + value);
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        double out = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        return out;
    } catch (const std::exception&) {
        throw std::invalid_argument("value for '" + key + "' is not a number: " + value);
    }
}

}  // namespace

GeneratorSpec parse_generator_spec(const std::string& text) {
    GeneratorSpec spec;
    std::unordered_set<std::string> seen;
    bool have_family = false;

    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        size_t eq = token.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == token.size())
            throw std::invalid_argument("expected key=value, got '" + token + "'");
        std::string k = token.substr(0, eq);
        std::string v = token.substr(eq + 1);
        if (!seen.insert(k).second)
            throw std::invalid_argument("duplicate key '" + k + "'");

        if (k == "family") {
            spec.family = family_from_name(v);
            have_family = true;
        } else if (k == "n") {
            spec.n = static_cast<int>(parse_int(k, v));
        } else if (k == "p") {
            spec.p = parse_double(k, v);
        } else if (k == "k") {
            spec.k = static_cast<int>(parse_int(k, v));
        } else if (k == "beta") {
            spec.beta = parse_double(k, v);
        } else if (k == "m") {
            spec.m = static_cast<int>(parse_int(k, v));
        } else if (k == "m0") {
            spec.m0 = static_cast<int>(parse_int(k, v));
        } else if (k == "gamma") {
            spec.gamma = parse_double(k, v);
        } else if (k == "temperature") {
            spec.temperature = parse_double(k, v);
        } else if (k == "seed") {
            long long s = parse_int(k, v);
            if (s < 0) throw std::invalid_argument("seed must be nonnegative");
            spec.seed = static_cast<std::uint64_t>(s);
        } else {
            throw std::invalid_argument("unknown key '" + k + "'");
        }
    }

    if (!have_family) throw std::invalid_argument("missing key 'family'");
    if (!seen.count("n")) throw std::invalid_argument("missing key 'n'");

    auto require = [&seen](const char* k) {
        if (!seen.count(k))
            throw std::invalid_argument(std::string("missing key '") + k + "'");
    };
    auto forbid = [&seen, &spec](const char* k) {
        if (seen.count(k))
            throw std::invalid_argument(std::string("key '") + k + "' does not apply to family " +
                                        family_name(spec.family));
    };
    switch (spec.family) {
        case Family::ER:
            require("p");
            forbid("k"); forbid("beta"); forbid("m"); forbid("m0");
            forbid("gamma"); forbid("temperature");
            break;
        case Family::WS:
            require("k"); require("beta");
            forbid("p"); forbid("m"); forbid("m0"); forbid("gamma"); forbid("temperature");
            break;
        case Family::BA:
            require("m");
            forbid("p"); forbid("k"); forbid("beta"); forbid("gamma"); forbid("temperature");
            break;
        case Family::HGG:
            require("k"); require("gamma");
            forbid("p"); forbid("beta"); forbid("m"); forbid("m0");
            break;
    }
    validate_generator_spec(spec);
    return spec;
}

std::string serialize_generator_spec(const GeneratorSpec& spec) {
    validate_generator_spec(spec);
    std::string out = std::string("family=") + family_name(spec.family) +
                      " n=" + std::to_string(spec.n);
    switch (spec.family) {
        case Family::ER:
            out += " p=" + fmt_double(spec.p);
            break;
        case Family::WS:
            out += " k=" + std::to_string(spec.k) + " beta=" + fmt_double(spec.beta);
            break;
        case Family::BA:
            out += " m=" + std::to_string(spec.m) +
                   " m0=" + std::to_string(spec.m0 < 0 ? spec.m : spec.m0);
            break;
        case Family::HGG:
            out += " k=" + std::to_string(spec.k) + " gamma=" + fmt_double(spec.gamma) +
                   " temperature=" + fmt_double(spec.temperature);
            break;
    }
    out += " seed=" + std::to_string(spec.seed);
    return out;
}

}  // namespace netcurv
