#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "siet/bounds.hpp"

namespace siet {

/// One evaluated point of a rate/energy/DEP trade-off sweep.
struct FrontierPoint {
    double lambda = 0.0;
    std::vector<double> type;
    double rate_ub_exact = 0.0;
    double rate_ub_stirling = 0.0;
    double energy_ub = 0.0;
    double dep_lb = 0.0;
    double delta = 0.0;
    std::optional<double> dep_target; // set by dep_energy_curve
    bool feasible = true;
};

/// Per-symbol expected harvested energy E[g(x_l + W)], the ordering key of
/// the interpolation family.
std::vector<double> expected_energy_per_symbol(const Constellation& c, ChannelParams ch,
                                               const HarvesterModel& m);

/// The one-parameter type family (1 - lambda) * uniform(all symbols)
/// + lambda * uniform(top-energy group), where the top group is the maximal
/// set of symbols tied for the largest expected harvested energy. lambda = 0
/// is the uniform type, lambda = 1 concentrates on the top group.
InputType interpolation_family(double lambda, std::span<const double> symbol_energy_means);

struct FrontierConfig {
    std::int64_t n = 80;
    double delta = 1e-4;
    RegionOptions region;
};

/// Evaluates the bound tuple along a sorted lambda grid. The MAP detector is
/// rebuilt per point with the point's type as prior, so the decision regions
/// track the sweep.
std::vector<FrontierPoint> sweep(std::span<const double> lambdas, const Constellation& c,
                                 const FrontierConfig& cfg, ChannelParams ch,
                                 const HarvesterModel& m);

/// For each DEP target, finds the family point of largest energy rate whose
/// DEP lower bound does not exceed the target (bisection on lambda; the
/// search handles the bound rising or falling along the family). Targets no
/// family member satisfies come back flagged infeasible.
std::vector<FrontierPoint> dep_energy_curve(std::span<const double> dep_targets,
                                            const Constellation& c, const FrontierConfig& cfg,
                                            ChannelParams ch, const HarvesterModel& m);

/// All integer count vectors of length L summing to n (every rational type
/// with denominator n). Intended for exhaustive certification on toy scales;
/// throws std::invalid_argument when the enumeration would exceed two
/// million types.
std::vector<SymbolCounts> enumerate_rational_types(std::size_t L, std::int64_t n);

} // namespace siet
