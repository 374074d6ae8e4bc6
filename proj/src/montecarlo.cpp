#include "siet/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

namespace siet {

namespace {

constexpr std::uint64_t kEopSeedSalt = 0x656f705f73696dULL;

double binomial_stderr(double p_hat, std::int64_t trials) {
    return std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials));
}

void require_prior_matches_type(const HomogeneousCode& code, const MapDetector& detector) {
    const InputType type = code_type(code);
    const auto& prior = detector.prior();
    if (prior.size() != type.size()) {
        throw std::invalid_argument("detector prior length does not match the code type");
    }
    double prior_sum = 0.0;
    for (double w : prior) prior_sum += w;
    for (std::size_t l = 0; l < prior.size(); ++l) {
        if (std::abs(prior[l] / prior_sum - type[l]) > 1e-12) {
            throw std::invalid_argument(
                "detector prior must equal the code type for a homogeneous decoder");
        }
    }
}

double analytic_dep_from_regions(const HomogeneousCode& code, const RegionProbs& rp) {
    // Correct decoding needs all n positions right: prod_l p_l^{count_l}.
    double log_success = 0.0;
    for (std::size_t l = 0; l < rp.p.size(); ++l) {
        const std::int64_t count = code.counts.counts[l];
        if (count == 0) continue;
        if (rp.p[l] <= 0.0) return 1.0;
        log_success += static_cast<double>(count) * std::log(rp.p[l]);
    }
    return -std::expm1(log_success);
}

} // namespace

DepEstimate simulate_dep(const HomogeneousCode& code, const MapDetector& detector,
                         const SimulationOptions& opt) {
    if (opt.trials < 1) throw std::invalid_argument("at least one trial is required");
    require_prior_matches_type(code, detector);

    const RegionProbs rp =
        region_probs(detector, RegionOptions{opt.region_samples, opt.seed, true});

    DepEstimate est;
    est.trials = opt.trials;
    est.analytic_dep = analytic_dep_from_regions(code, rp);
    if (est.analytic_dep < opt.rare_event_threshold) {
        est.dep_hat = est.analytic_dep;
        est.dep_stderr = 0.0;
        est.mc_skipped = true;
        return est;
    }

    const ChannelParams ch = detector.channel();
    const std::uint64_t M = code.message_count();
    std::int64_t errors = 0;
    for (std::int64_t trial = 0; trial < opt.trials; ++trial) {
        UniformStream rng(NoiseStream{opt.seed, static_cast<std::uint64_t>(trial)});
        const auto& word = code.codewords[static_cast<std::size_t>(rng.next_below(M))];
        bool ok = true;
        for (std::int32_t sent : word) {
            const Complex y = detector.constellation().symbol(static_cast<std::size_t>(sent)) +
                              rng.next_cscg(ch.sigma2);
            if (detector.classify(y) != static_cast<std::size_t>(sent)) {
                ok = false;
                break;
            }
        }
        if (!ok) ++errors;
    }
    est.dep_hat = static_cast<double>(errors) / static_cast<double>(opt.trials);
    est.dep_stderr = binomial_stderr(est.dep_hat, opt.trials);
    return est;
}

EopEstimate simulate_eop(const HomogeneousCode& code, const Constellation& c, ChannelParams ch,
                         const HarvesterModel& m, double B, const SimulationOptions& opt) {
    if (opt.trials < 1) throw std::invalid_argument("at least one trial is required");
    if (!(B >= 0.0)) throw std::invalid_argument("energy threshold B must be nonnegative");
    if (c.size() != code.counts.counts.size()) {
        throw std::invalid_argument("constellation size does not match the code counts");
    }

    const std::uint64_t M = code.message_count();
    std::int64_t outages = 0;
    for (std::int64_t trial = 0; trial < opt.trials; ++trial) {
        UniformStream rng(NoiseStream{opt.seed ^ kEopSeedSalt, static_cast<std::uint64_t>(trial)});
        const auto& word = code.codewords[static_cast<std::size_t>(rng.next_below(M))];
        double energy_sum = 0.0;
        for (std::int32_t sent : word) {
            const Complex z = c.symbol(static_cast<std::size_t>(sent)) + rng.next_cscg(ch.sigma2);
            energy_sum += harvested_energy(z, m);
        }
        if (energy_sum / static_cast<double>(word.size()) < B) ++outages;
    }
    EopEstimate est;
    est.trials = opt.trials;
    est.eop_hat = static_cast<double>(outages) / static_cast<double>(opt.trials);
    est.eop_stderr = binomial_stderr(est.eop_hat, opt.trials);
    return est;
}

ValidationLedger validate_bounds(const HomogeneousCode& code, const MapDetector& detector,
                                 const HarvesterModel& m, double B, double delta_target,
                                 const SimulationOptions& opt) {
    ValidationLedger ledger;
    const ChannelParams ch = detector.channel();
    const Constellation& c = detector.constellation();
    const InputType type = code_type(code);
    const RegionProbs rp =
        region_probs(detector, RegionOptions{opt.region_samples, opt.seed, true});

    ledger.dep = simulate_dep(code, detector, opt);
    ledger.eop = simulate_eop(code, c, ch, m, B, opt);
    ledger.dep_bound = dep_lb_homogeneous(type, rp, code.block_length()).value;
    ledger.eop_bound = eop_lb(type, B, c, ch, m);
    ledger.rate =
        std::log2(static_cast<double>(code.message_count())) / static_cast<double>(code.block_length());
    ledger.rate_bound = rate_ub_exact(code.counts);
    ledger.B = B;
    ledger.delta_target = delta_target;

    // A single hypothetical event bounds the stderr away from zero so that
    // zero-error runs do not degenerate the interval.
    const double floor_se = 1.0 / static_cast<double>(opt.trials);
    const double dep_se = std::max({ledger.dep.dep_stderr,
                                    binomial_stderr(ledger.dep.analytic_dep, opt.trials),
                                    floor_se});
    const double eop_se = std::max(ledger.eop.eop_stderr, floor_se);

    const double dep_margin = ledger.dep.dep_hat + 4.0 * dep_se - ledger.dep_bound;
    ledger.checks.push_back({"dep_bound_dominated_by_simulation", dep_margin >= 0.0, dep_margin});

    const double eop_margin = ledger.eop.eop_hat + 4.0 * eop_se - ledger.eop_bound;
    ledger.checks.push_back({"eop_bound_dominated_by_simulation", eop_margin >= 0.0, eop_margin});

    const double rate_margin = ledger.rate_bound - ledger.rate;
    ledger.checks.push_back({"code_rate_within_exact_bound", rate_margin >= -1e-9, rate_margin});

    return ledger;
}

} // namespace siet
