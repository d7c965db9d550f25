#pragma once

#include <vector>

namespace netcurv {

// Optimal solution of a balanced transportation problem: total cost plus the
// coupling itself, row-major (flow[i * C + j] = mass moved from supply i to
// demand j).
struct TransportSolution {
    double cost = 0.0;
    std::vector<double> flow;
};

// Exact minimum-cost transport between two discrete distributions.
// cost is row-major: cost[i * demand.size() + j] moves one unit from
// supply point i to demand point j. Totals must balance.
// Solved with the transportation simplex (Vogel start, Bland's rule, so the
// pivot sequence and hence the returned plan are deterministic); the result
// is certified optimal via the dual solution before returning (logic_error
// if the certificate fails, which would indicate a solver bug).
TransportSolution transport_solve(const std::vector<double>& supply,
                                  const std::vector<double>& demand,
                                  const std::vector<double>& cost);

double transport_cost(const std::vector<double>& supply,
                      const std::vector<double>& demand,
                      const std::vector<double>& cost);

} // namespace netcurv
