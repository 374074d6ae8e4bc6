#pragma once

#include <cstdint>
#include <vector>

#include "siet/channel.hpp"
#include "siet/constellation.hpp"
#include "siet/typespace.hpp"

namespace siet {

/// Symbol-wise MAP decision rule. Decision regions are induced, never stored:
/// y belongs to symbol l's region iff l maximizes
/// log prior_l - |y - x_l|^2 / sigma2, with exact ties going to the lowest
/// index. Symbols with zero prior weight never win (their region is empty).
///
/// The prior is any nonnegative weight vector with a positive sum; scaling it
/// by a constant does not change the rule.
class MapDetector {
public:
    MapDetector(Constellation constellation, std::vector<double> prior_weights, ChannelParams ch);

    std::size_t classify(Complex y) const;

    const Constellation& constellation() const noexcept { return constellation_; }
    const std::vector<double>& prior() const noexcept { return prior_; }
    ChannelParams channel() const noexcept { return ch_; }

private:
    Constellation constellation_;
    std::vector<double> prior_;
    std::vector<double> log_prior_; // -inf marks excluded symbols
    ChannelParams ch_;
};

enum class RegionMethod { ClosedForm, Quadrature, MonteCarlo };

/// Per-symbol correct-decision probabilities p_l = Pr[Y in region_l | X = x_l].
struct RegionProbs {
    std::vector<double> p;
    RegionMethod method = RegionMethod::ClosedForm;
    /// Largest per-symbol standard error (zero for closed form).
    double est_error = 0.0;
};

struct RegionOptions {
    std::int64_t samples = 1'000'000; // Monte Carlo samples per symbol
    std::uint64_t seed = 1;
    bool parallel = true;
};

/// Correct-decision probability of every symbol under the detector's own
/// rule. Uniform priors on evenly spaced full rectangular grids factor into
/// 1-D Gaussian strip probabilities and are evaluated in closed form; any
/// other case is estimated by Monte Carlo with the recorded standard error.
RegionProbs region_probs(const MapDetector& d, const RegionOptions& opt = {});

/// The pmf proportional to the correct-decision probabilities:
/// Q_l = p_l / sum_j p_j. Throws std::invalid_argument if all p_l are zero.
InputType q_pmf(const RegionProbs& rp);

/// Given, per symbol, the correct-detection integrals of a finite set of
/// candidate decoding regions, picks the candidate with the minimal integral
/// (first listed wins ties). For a homogeneous decoder each symbol has one
/// candidate and the selection is the identity.
std::vector<std::size_t> min_region_select(const std::vector<std::vector<double>>& candidate_integrals);

} // namespace siet
