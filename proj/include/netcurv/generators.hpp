#pragma once

#include <cstdint>
#include <string>

#include "netcurv/graph.hpp"

namespace netcurv {

enum class Family { ER, WS, BA, HGG };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// One record describing a random-graph draw. Which fields matter depends on
// family: ER uses n/p, WS uses n/k/beta, BA uses n/m/m0 (m0 < 0 means "same
// as m"), HGG uses n/k (target mean degree)/gamma/temperature.
struct GeneratorSpec {
    Family family = Family::ER;
    int n = 0;
    double p = 0.0;
    int k = 0;
    double beta = 0.0;
    int m = 0;
    int m0 = -1;
    double gamma = 2.0;
    double temperature = 0.0;
    std::uint64_t seed = 0;
};

// Flat "key=value key=value" line, e.g. "family=ws n=1000 k=10 beta=0.5 seed=7".
// Unknown, duplicate, or missing-required keys are rejected.
GeneratorSpec parse_generator_spec(const std::string& text);
std::string serialize_generator_spec(const GeneratorSpec& spec);

// Throws std::invalid_argument when the fields violate the family's
// constraints (used by generate(); exposed so callers can validate early).
void validate_generator_spec(const GeneratorSpec& spec);

Graph generate(const GeneratorSpec& spec);

// Erdos-Renyi G(n, p): every unordered pair independently with probability p.
Graph generate_er(int n, double p, std::uint64_t seed);

// Watts-Strogatz: ring with k neighbors per vertex (k/2 each side), then each
// lattice edge's far endpoint is rewired with probability beta to a uniform
// vertex, rejecting self-loops and duplicates (up to n retries, then the
// original edge is kept). Edge count is always n*k/2.
Graph generate_ws(int n, int k, double beta, std::uint64_t seed);

// Barabasi-Albert: complete seed on m0 vertices, then each arrival attaches
// to m distinct existing vertices drawn proportional to degree.
Graph generate_ba(int n, int m, int m0, std::uint64_t seed);

// Hyperbolic disk at temperature 0: radii from density a*sinh(a*r) with
// a = (gamma-1)/2, uniform angles, edge iff hyperbolic distance <= R. The
// disk radius R is calibrated numerically so the ensemble mean degree hits
// k_target (cached per (n, k_target, gamma); calibration uses its own fixed
// seeds so the user seed only moves the sampled points).
Graph generate_hgg(int n, double k_target, double gamma, double temperature,
                   std::uint64_t seed);

// Exposed for direct testing of the connection rule.
bool hyperbolic_connected(double r1, double t1, double r2, double t2, double radius);

}  // namespace netcurv
