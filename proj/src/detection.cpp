#include "siet/detection.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

namespace siet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Salt keeps region-sampling streams disjoint from link-simulation streams
// that share the same user seed.
constexpr std::uint64_t kRegionSeedSalt = 0x7265676e5f6d6373ULL;

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

/// P(a < N < b) for N ~ Normal(0, std^2); a or b may be +-infinity.
double interval_prob(double a, double b, double std_dev) {
    const double hi = std::isinf(b) ? 1.0 : normal_cdf(b / std_dev);
    const double lo = std::isinf(a) ? 0.0 : normal_cdf(a / std_dev);
    return std::max(hi - lo, 0.0);
}

struct AxisGrid {
    std::vector<double> coords; // sorted unique coordinates
    bool evenly_spaced = false;
};

AxisGrid axis_grid(const std::vector<double>& values) {
    AxisGrid g;
    g.coords = values;
    std::sort(g.coords.begin(), g.coords.end());
    g.coords.erase(std::unique(g.coords.begin(), g.coords.end(),
                               [](double a, double b) { return std::abs(a - b) <= 1e-9; }),
                   g.coords.end());
    g.evenly_spaced = true;
    if (g.coords.size() >= 3) {
        const double step = g.coords[1] - g.coords[0];
        for (std::size_t i = 2; i < g.coords.size(); ++i) {
            if (std::abs((g.coords[i] - g.coords[i - 1]) - step) > 1e-9 * std::max(1.0, step)) {
                g.evenly_spaced = false;
                break;
            }
        }
    }
    return g;
}

std::size_t axis_index(const AxisGrid& g, double value) {
    for (std::size_t i = 0; i < g.coords.size(); ++i) {
        if (std::abs(g.coords[i] - value) <= 1e-9) return i;
    }
    return g.coords.size();
}

bool is_uniform_prior(const std::vector<double>& prior) {
    const double first = prior.front();
    if (!(first > 0.0)) return false;
    for (double w : prior) {
        if (std::abs(w - first) > 1e-12 * first) return false;
    }
    return true;
}

/// True when the symbol set is exactly the Cartesian product of its distinct
/// re and im coordinates with even spacing on each axis. MAP regions under a
/// uniform prior are then axis-aligned midline rectangles.
bool is_full_rect_grid(const Constellation& c, AxisGrid& re_axis, AxisGrid& im_axis) {
    std::vector<double> res, ims;
    res.reserve(c.size());
    ims.reserve(c.size());
    for (Complex x : c.symbols()) {
        res.push_back(x.real());
        ims.push_back(x.imag());
    }
    re_axis = axis_grid(res);
    im_axis = axis_grid(ims);
    if (!re_axis.evenly_spaced || !im_axis.evenly_spaced) return false;
    if (re_axis.coords.size() * im_axis.coords.size() != c.size()) return false;
    // Every grid point must be present (distinctness of symbols then gives
    // exactly one symbol per point).
    for (Complex x : c.symbols()) {
        if (axis_index(re_axis, x.real()) == re_axis.coords.size()) return false;
        if (axis_index(im_axis, x.imag()) == im_axis.coords.size()) return false;
    }
    return true;
}

double strip_prob(const AxisGrid& g, std::size_t idx, double std_dev) {
    const double c = g.coords[idx];
    const double lo = idx == 0 ? -kInf : 0.5 * (g.coords[idx - 1] + g.coords[idx]) - c;
    const double hi = idx + 1 == g.coords.size() ? kInf : 0.5 * (g.coords[idx] + g.coords[idx + 1]) - c;
    return interval_prob(lo, hi, std_dev);
}

double mc_region_prob(const MapDetector& d, std::size_t symbol, std::int64_t samples,
                      std::uint64_t seed) {
    UniformStream rng(NoiseStream{seed ^ kRegionSeedSalt, symbol});
    const Complex x = d.constellation().symbol(symbol);
    const double sigma2 = d.channel().sigma2;
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < samples; ++i) {
        const Complex y = x + rng.next_cscg(sigma2);
        if (d.classify(y) == symbol) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

} // namespace

MapDetector::MapDetector(Constellation constellation, std::vector<double> prior_weights,
                         ChannelParams ch)
    : constellation_(std::move(constellation)), prior_(std::move(prior_weights)), ch_(ch) {
    if (prior_.size() != constellation_.size()) {
        throw std::invalid_argument("prior length must match the constellation size");
    }
    double sum = 0.0;
    for (double w : prior_) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw std::invalid_argument("prior weights must be finite and nonnegative");
        }
        sum += w;
    }
    if (!(sum > 0.0)) {
        throw std::invalid_argument("prior must have at least one positive weight");
    }
    log_prior_.resize(prior_.size());
    for (std::size_t i = 0; i < prior_.size(); ++i) {
        log_prior_[i] = prior_[i] > 0.0 ? std::log(prior_[i]) : -kInf;
    }
}

std::size_t MapDetector::classify(Complex y) const {
    std::size_t best = constellation_.size();
    double best_score = -kInf;
    for (std::size_t l = 0; l < constellation_.size(); ++l) {
        if (log_prior_[l] == -kInf) continue;
        const Complex x = constellation_.symbol(l);
        const double dr = y.real() - x.real();
        const double di = y.imag() - x.imag();
        const double score = log_prior_[l] - (dr * dr + di * di) / ch_.sigma2;
        if (score > best_score) {
            best_score = score;
            best = l;
        }
    }
    return best;
}

RegionProbs region_probs(const MapDetector& d, const RegionOptions& opt) {
    const std::size_t L = d.constellation().size();
    RegionProbs rp;
    rp.p.assign(L, 0.0);

    AxisGrid re_axis, im_axis;
    if (is_uniform_prior(d.prior()) && is_full_rect_grid(d.constellation(), re_axis, im_axis)) {
        const double std_dev = std::sqrt(d.channel().sigma2 / 2.0);
        for (std::size_t l = 0; l < L; ++l) {
            const Complex x = d.constellation().symbol(l);
            rp.p[l] = strip_prob(re_axis, axis_index(re_axis, x.real()), std_dev) *
                      strip_prob(im_axis, axis_index(im_axis, x.imag()), std_dev);
        }
        rp.method = RegionMethod::ClosedForm;
        rp.est_error = 0.0;
        return rp;
    }

    if (opt.samples < 1) throw std::invalid_argument("region sampling needs at least one sample");
    rp.method = RegionMethod::MonteCarlo;
    std::vector<std::future<double>> jobs(L);
    for (std::size_t l = 0; l < L; ++l) {
        if (d.prior()[l] <= 0.0) continue; // empty region, p stays 0
        auto task = [&d, l, &opt] { return mc_region_prob(d, l, opt.samples, opt.seed); };
        jobs[l] = opt.parallel ? std::async(std::launch::async, task)
                               : std::async(std::launch::deferred, task);
    }
    double worst_se = 0.0;
    for (std::size_t l = 0; l < L; ++l) {
        if (!jobs[l].valid()) continue;
        rp.p[l] = jobs[l].get();
        const double se =
            std::sqrt(rp.p[l] * (1.0 - rp.p[l]) / static_cast<double>(opt.samples));
        worst_se = std::max(worst_se, se);
    }
    rp.est_error = worst_se;
    return rp;
}

InputType q_pmf(const RegionProbs& rp) {
    double sum = 0.0;
    for (double v : rp.p) sum += v;
    if (!(sum > 0.0)) {
        throw std::invalid_argument("degenerate detector: every region probability is zero");
    }
    std::vector<double> q(rp.p.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = rp.p[i] / sum;
    return InputType(std::move(q));
}

std::vector<std::size_t> min_region_select(
    const std::vector<std::vector<double>>& candidate_integrals) {
    std::vector<std::size_t> picks;
    picks.reserve(candidate_integrals.size());
    for (std::size_t l = 0; l < candidate_integrals.size(); ++l) {
        const auto& cands = candidate_integrals[l];
        if (cands.empty()) {
            throw std::invalid_argument("symbol " + std::to_string(l) +
                                        " has no candidate decoding region");
        }
        std::size_t best = 0;
        for (std::size_t k = 1; k < cands.size(); ++k) {
            if (cands[k] < cands[best]) best = k;
        }
        picks.push_back(best);
    }
    return picks;
}

} // namespace siet
