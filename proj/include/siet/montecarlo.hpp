#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "siet/bounds.hpp"
#include "siet/codec.hpp"
#include "siet/detection.hpp"
#include "siet/harvester.hpp"

namespace siet {

struct SimulationOptions {
    std::int64_t trials = 100'000;
    std::uint64_t seed = 1;
    /// Monte Carlo samples per symbol when region probabilities are not
    /// available in closed form.
    std::int64_t region_samples = 1'000'000;
    /// Below this analytic DEP the empirical estimate cannot resolve the
    /// event; the result is reported analytically and flagged.
    double rare_event_threshold = 1e-8;
};

struct DepEstimate {
    double dep_hat = 0.0;
    double dep_stderr = 0.0;
    /// Closed-form companion 1 - prod_l p_l^{n P(l)} for this decoder.
    double analytic_dep = 0.0;
    bool mc_skipped = false;
    std::int64_t trials = 0;
};

struct EopEstimate {
    double eop_hat = 0.0;
    double eop_stderr = 0.0;
    std::int64_t trials = 0;
};

/// Empirical average decoding error probability of the code under the given
/// symbol-wise MAP decoder. Each trial sends a uniformly drawn message and
/// declares an error unless every position decodes back to the sent index.
/// The detector prior must equal the code type.
DepEstimate simulate_dep(const HomogeneousCode& code, const MapDetector& detector,
                         const SimulationOptions& opt);

/// Empirical energy outage probability: the fraction of trials in which the
/// per-channel-use harvested energy of the received block falls below B.
EopEstimate simulate_eop(const HomogeneousCode& code, const Constellation& c, ChannelParams ch,
                         const HarvesterModel& m, double B, const SimulationOptions& opt);

struct ValidationCheck {
    std::string name;
    bool pass = false;
    /// How much slack the assertion had (negative means it failed).
    double margin = 0.0;
};

struct ValidationLedger {
    std::vector<ValidationCheck> checks;
    DepEstimate dep;
    EopEstimate eop;
    double dep_bound = 0.0;
    double eop_bound = 0.0;
    double rate = 0.0;
    double rate_bound = 0.0;
    double B = 0.0;
    double delta_target = 0.0;

    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
};

/// Cross-checks the evaluated bounds against the link simulation:
/// (a) dep_hat + 4 se >= homogeneous DEP bound, (b) eop_hat + 4 se >= EOP
/// bound at the same B, (c) (log2 M)/n <= exact rate bound. Failures are
/// recorded, not thrown. The stderr used for (a) and (b) never drops below
/// what one observed event would contribute, so an all-success run cannot
/// produce a vacuous zero-width interval.
ValidationLedger validate_bounds(const HomogeneousCode& code, const MapDetector& detector,
                                 const HarvesterModel& m, double B, double delta_target,
                                 const SimulationOptions& opt);

} // namespace siet
