#include "siet/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace siet {

namespace {

FrontierPoint evaluate_point(double lambda, const InputType& type, const Constellation& c,
                             const FrontierConfig& cfg, ChannelParams ch,
                             const HarvesterModel& m) {
    const MapDetector detector(c, type.probs(), ch);
    const RegionProbs rp = region_probs(detector, cfg.region);
    const BoundsReport report = theorem1_report(type, cfg.n, cfg.delta, c, ch, m, rp);

    FrontierPoint pt;
    pt.lambda = lambda;
    pt.type = type.probs();
    pt.rate_ub_exact = report.rate_ub_exact;
    pt.rate_ub_stirling = report.rate_ub_stirling;
    pt.energy_ub = report.energy_rate_ub;
    pt.dep_lb = report.dep_lb;
    pt.delta = cfg.delta;
    return pt;
}

} // namespace

std::vector<double> expected_energy_per_symbol(const Constellation& c, ChannelParams ch,
                                               const HarvesterModel& m) {
    std::vector<double> means;
    means.reserve(c.size());
    for (Complex x : c.symbols()) {
        means.push_back(expected_harvested_energy(x, ch, m));
    }
    return means;
}

InputType interpolation_family(double lambda, std::span<const double> symbol_energy_means) {
    if (!(lambda >= 0.0) || !(lambda <= 1.0)) {
        throw std::invalid_argument("lambda must lie in [0, 1]");
    }
    if (symbol_energy_means.empty()) {
        throw std::invalid_argument("the family needs at least one symbol");
    }
    const std::size_t L = symbol_energy_means.size();
    const double top = *std::max_element(symbol_energy_means.begin(), symbol_energy_means.end());
    std::vector<bool> in_top(L, false);
    std::size_t top_count = 0;
    for (std::size_t l = 0; l < L; ++l) {
        if (symbol_energy_means[l] >= top - 1e-9 * std::max(1.0, std::abs(top))) {
            in_top[l] = true;
            ++top_count;
        }
    }
    std::vector<double> p(L, (1.0 - lambda) / static_cast<double>(L));
    for (std::size_t l = 0; l < L; ++l) {
        if (in_top[l]) p[l] += lambda / static_cast<double>(top_count);
    }
    return InputType(std::move(p));
}

std::vector<FrontierPoint> sweep(std::span<const double> lambdas, const Constellation& c,
                                 const FrontierConfig& cfg, ChannelParams ch,
                                 const HarvesterModel& m) {
    if (lambdas.empty()) throw std::invalid_argument("lambda grid must be nonempty");
    if (!std::is_sorted(lambdas.begin(), lambdas.end())) {
        throw std::invalid_argument("lambda grid must be sorted ascending");
    }
    const std::vector<double> means = expected_energy_per_symbol(c, ch, m);
    std::vector<FrontierPoint> points;
    points.reserve(lambdas.size());
    for (double lambda : lambdas) {
        points.push_back(evaluate_point(lambda, interpolation_family(lambda, means), c, cfg, ch, m));
    }
    return points;
}

std::vector<FrontierPoint> dep_energy_curve(std::span<const double> dep_targets,
                                            const Constellation& c, const FrontierConfig& cfg,
                                            ChannelParams ch, const HarvesterModel& m) {
    const std::vector<double> means = expected_energy_per_symbol(c, ch, m);
    const auto dep_at = [&](double lambda) {
        const InputType type = interpolation_family(lambda, means);
        const MapDetector detector(c, type.probs(), ch);
        const RegionProbs rp = region_probs(detector, cfg.region);
        return dep_lb_homogeneous(type, rp, cfg.n).value;
    };
    const double dep_lo = dep_at(0.0);
    const double dep_hi = dep_at(1.0);

    std::vector<FrontierPoint> points;
    points.reserve(dep_targets.size());
    for (double target : dep_targets) {
        if (!(target > 0.0) || !(target < 1.0)) {
            throw std::invalid_argument("DEP targets must lie in (0, 1)");
        }
        FrontierPoint pt;
        if (dep_hi <= target) {
            // The maximal-energy end already satisfies the target.
            pt = evaluate_point(1.0, interpolation_family(1.0, means), c, cfg, ch, m);
        } else if (dep_lo <= target) {
            // The bound crosses the target inside the family; bisect toward
            // the feasible side of largest energy (energy grows with lambda).
            double lo = 0.0, hi = 1.0;
            for (int iter = 0; iter < 60 && hi - lo > 1e-9; ++iter) {
                const double mid = 0.5 * (lo + hi);
                if (dep_at(mid) <= target) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            pt = evaluate_point(lo, interpolation_family(lo, means), c, cfg, ch, m);
        } else {
            // No family member meets the target.
            pt.lambda = 0.0;
            pt.type = interpolation_family(0.0, means).probs();
            pt.dep_lb = dep_lo;
            pt.delta = cfg.delta;
            pt.feasible = false;
        }
        pt.dep_target = target;
        points.push_back(pt);
    }
    return points;
}

std::vector<SymbolCounts> enumerate_rational_types(std::size_t L, std::int64_t n) {
    if (L == 0) throw std::invalid_argument("alphabet must be nonempty");
    if (n < 1) throw std::invalid_argument("block length must be >= 1");
    // Count compositions C(n + L - 1, L - 1) before materializing.
    double estimate = 1.0;
    for (std::size_t k = 1; k < L; ++k) {
        estimate *= static_cast<double>(n + static_cast<std::int64_t>(k)) / static_cast<double>(k);
    }
    if (estimate > 2e6) {
        throw std::invalid_argument("rational-type enumeration too large; reduce L or n");
    }

    std::vector<SymbolCounts> out;
    std::vector<std::int64_t> cur(L, 0);
    const auto recurse = [&](auto&& self, std::size_t pos, std::int64_t remaining) -> void {
        if (pos + 1 == L) {
            cur[pos] = remaining;
            out.emplace_back(cur, n);
            return;
        }
        for (std::int64_t k = 0; k <= remaining; ++k) {
            cur[pos] = k;
            self(self, pos + 1, remaining - k);
        }
    };
    recurse(recurse, 0, n);
    return out;
}

} // namespace siet
