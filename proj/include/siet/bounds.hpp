#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "siet/constellation.hpp"
#include "siet/detection.hpp"
#include "siet/harvester.hpp"
#include "siet/typespace.hpp"

namespace siet {

/// A decoding-error-probability lower bound. `value` is clamped to [0,1];
/// `raw` keeps the unclamped number (weak parameters can push it negative).
/// `support_mismatch` is set when some type places mass on a symbol whose
/// region probability is zero, in which case that codeword contributes its
/// worst case (zero correct-decoding probability) to the average.
struct DepBound {
    double value = 0.0;
    double raw = 0.0;
    bool support_mismatch = false;
};

/// Upper bound on the energy rate sustainable at outage probability delta:
/// (1 / (1 - delta)) * sum_l p_l E[g(x_l + W)].  delta in [0, 1).
double energy_rate_ub(const InputType& p, double delta, const Constellation& c, ChannelParams ch,
                      const HarvesterModel& m);

/// Lower bound on the energy outage probability at threshold B:
/// max(0, 1 - mean harvested energy / B).  B > 0.
double eop_lb(const InputType& p, double B, const Constellation& c, ChannelParams ch,
              const HarvesterModel& m);

/// Average-DEP lower bound for a code with one (rational, denominator n) type
/// per codeword:
///   1 - (1/M) sum_i exp(-n H(P_i) - n D(P_i || Q) + n log sum_j p_j)
/// with natural logs throughout and Q the normalized region probabilities.
DepBound dep_lb_general(const std::vector<InputType>& codeword_types, const RegionProbs& rp,
                        std::int64_t n);

/// The same bound when every codeword shares the type p.
DepBound dep_lb_homogeneous(const InputType& p, const RegionProbs& rp, std::int64_t n);

/// Exact information-rate upper bound (1/n) log2( n! / prod counts_l! ),
/// in bits per channel use. Never exceeds log2 L.
double rate_ub_exact(const SymbolCounts& c);

/// Entropy-form relaxation of the exact rate bound, evaluated with base-2
/// logs throughout so the leading term is the entropy in bits:
///   H(p) + (1/n^2)(1/12 - sum 1/(12 p_l + 1))
///        + (1/n)(log2 sqrt(2 pi) - sum log2 sqrt(2 pi p_l))
///        - (log2 n / n)(L - 1)/2,
/// restricted to the support of p (L counts supported symbols only).
double rate_ub_stirling(const InputType& p, std::int64_t n);

/// The jointly evaluated bound tuple for one code type.
struct BoundsReport {
    double rate_ub_exact = 0.0;
    double rate_ub_stirling = 0.0;
    double energy_rate_ub = 0.0;
    double dep_lb = 0.0;
    double dep_lb_raw = 0.0;
    bool dep_support_mismatch = false;
    std::optional<double> eop_lb; // only when an energy threshold B was given

    // input echo
    std::vector<double> type;
    std::int64_t n = 0;
    double delta = 0.0;
    double sigma2 = 0.0;
    double k2 = 0.0, k4 = 0.0, h_mag = 0.0;
    std::optional<double> B;
    RegionMethod region_method = RegionMethod::ClosedForm;
    double region_est_error = 0.0;
};

/// Assembles all bounds for one type: exact rate via largest-remainder
/// counts, the entropy-form rate, the energy rate at the given delta, the
/// homogeneous DEP bound from the region probabilities, and (when B is
/// given) the EOP bound at that threshold.
BoundsReport theorem1_report(const InputType& p, std::int64_t n, double delta,
                             const Constellation& c, ChannelParams ch, const HarvesterModel& m,
                             const RegionProbs& rp, std::optional<double> B = std::nullopt);

} // namespace siet
