#include "siet/bounds.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace siet {

namespace {

double mean_expected_energy(const InputType& p, const Constellation& c, ChannelParams ch,
                            const HarvesterModel& m) {
    if (p.size() != c.size()) {
        throw std::invalid_argument("type length must match the constellation size");
    }
    double sum = 0.0;
    for (std::size_t l = 0; l < c.size(); ++l) {
        if (p[l] > 0.0) sum += p[l] * expected_harvested_energy(c.symbol(l), ch, m);
    }
    return sum;
}

} // namespace

double energy_rate_ub(const InputType& p, double delta, const Constellation& c, ChannelParams ch,
                      const HarvesterModel& m) {
    if (!(delta >= 0.0) || !(delta < 1.0)) {
        throw std::invalid_argument("delta must lie in [0, 1)");
    }
    return mean_expected_energy(p, c, ch, m) / (1.0 - delta);
}

double eop_lb(const InputType& p, double B, const Constellation& c, ChannelParams ch,
              const HarvesterModel& m) {
    if (!(B > 0.0)) throw std::invalid_argument("energy threshold B must be positive");
    return std::max(0.0, 1.0 - mean_expected_energy(p, c, ch, m) / B);
}

DepBound dep_lb_general(const std::vector<InputType>& codeword_types, const RegionProbs& rp,
                        std::int64_t n) {
    if (codeword_types.empty()) {
        throw std::invalid_argument("at least one codeword type is required");
    }
    if (n < 1) throw std::invalid_argument("block length must be >= 1");

    double region_sum = 0.0;
    for (double v : rp.p) region_sum += v;
    if (!(region_sum > 0.0)) {
        throw std::invalid_argument("degenerate detector: every region probability is zero");
    }
    const double log_region_sum = std::log(region_sum);
    const InputType q = q_pmf(rp);

    DepBound out;
    // Accumulate the mean of exp(-nH - nD + n log sum) over codewords. Each
    // exponent is assembled exactly as written, in nats.
    double mean_exp = 0.0;
    const double nn = static_cast<double>(n);
    for (const InputType& type : codeword_types) {
        if (type.size() != rp.p.size()) {
            throw std::invalid_argument("type length must match the region probabilities");
        }
        const double h = entropy(type, LogBase::Natural);
        const double d = kl_divergence(type, q, LogBase::Natural);
        if (std::isinf(d)) {
            // Mass on a zero-probability region: exp(-inf) = 0, the worst
            // case for this codeword.
            out.support_mismatch = true;
            continue;
        }
        mean_exp += std::exp(-nn * h - nn * d + nn * log_region_sum);
    }
    mean_exp /= static_cast<double>(codeword_types.size());
    out.raw = 1.0 - mean_exp;
    out.value = std::min(1.0, std::max(0.0, out.raw));
    return out;
}

DepBound dep_lb_homogeneous(const InputType& p, const RegionProbs& rp, std::int64_t n) {
    return dep_lb_general(std::vector<InputType>{p}, rp, n);
}

double rate_ub_exact(const SymbolCounts& c) {
    const double rate = multinomial_log2(c) / static_cast<double>(c.n);
    assert(rate <= std::log2(static_cast<double>(c.counts.size())) + 1e-9);
    return rate;
}

double rate_ub_stirling(const InputType& p, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("block length must be >= 1");
    std::vector<double> support;
    support.reserve(p.size());
    for (double v : p.probs()) {
        if (v > 0.0) support.push_back(v);
    }
    const double L = static_cast<double>(support.size());
    const double nn = static_cast<double>(n);
    const double log2_sqrt_2pi = 0.5 * std::log2(2.0 * std::numbers::pi);

    double h = 0.0, sum_recip = 0.0, sum_log = 0.0;
    for (double v : support) {
        h -= v * std::log2(v);
        sum_recip += 1.0 / (12.0 * v + 1.0);
        sum_log += 0.5 * std::log2(2.0 * std::numbers::pi * v);
    }
    return h + (1.0 / (nn * nn)) * (1.0 / 12.0 - sum_recip) +
           (1.0 / nn) * (log2_sqrt_2pi - sum_log) -
           (std::log2(nn) / nn) * (L - 1.0) / 2.0;
}

BoundsReport theorem1_report(const InputType& p, std::int64_t n, double delta,
                             const Constellation& c, ChannelParams ch, const HarvesterModel& m,
                             const RegionProbs& rp, std::optional<double> B) {
    BoundsReport r;
    r.rate_ub_exact = rate_ub_exact(rationalize(p, n));
    r.rate_ub_stirling = rate_ub_stirling(p, n);
    r.energy_rate_ub = energy_rate_ub(p, delta, c, ch, m);
    const DepBound dep = dep_lb_homogeneous(p, rp, n);
    r.dep_lb = dep.value;
    r.dep_lb_raw = dep.raw;
    r.dep_support_mismatch = dep.support_mismatch;
    if (B) r.eop_lb = eop_lb(p, *B, c, ch, m);

    r.type = p.probs();
    r.n = n;
    r.delta = delta;
    r.sigma2 = ch.sigma2;
    r.k2 = m.k2;
    r.k4 = m.k4;
    r.h_mag = m.h_mag;
    r.B = B;
    r.region_method = rp.method;
    r.region_est_error = rp.est_error;
    return r;
}

} // namespace siet
