#include "siet/typespace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace siet {

namespace {

constexpr double kSumTolerance = 1e-12;

double log_in(double x, LogBase base) {
    return base == LogBase::Two ? std::log2(x) : std::log(x);
}

} // namespace

InputType::InputType(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw std::invalid_argument("pmf must have at least one entry");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        const double p = probs_[i];
        if (!std::isfinite(p) || p < 0.0 || p > 1.0 + kSumTolerance) {
            throw std::invalid_argument("pmf entry " + std::to_string(i) + " outside [0,1]");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw std::invalid_argument("pmf entries sum to " + std::to_string(sum) + ", expected 1");
    }
}

InputType InputType::uniform(std::size_t size) {
    if (size == 0) throw std::invalid_argument("pmf must have at least one entry");
    return InputType(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

InputType InputType::point_mass(std::size_t size, std::size_t index) {
    if (index >= size) throw std::invalid_argument("point mass index out of range");
    std::vector<double> p(size, 0.0);
    p[index] = 1.0;
    return InputType(std::move(p));
}

SymbolCounts::SymbolCounts(std::vector<std::int64_t> counts_in, std::int64_t n_in)
    : counts(std::move(counts_in)), n(n_in) {
    if (counts.empty()) throw std::invalid_argument("counts must have at least one entry");
    if (n < 1) throw std::invalid_argument("block length must be >= 1");
    std::int64_t sum = 0;
    for (std::int64_t c : counts) {
        if (c < 0) throw std::invalid_argument("counts must be nonnegative");
        sum += c;
    }
    if (sum != n) {
        throw std::invalid_argument("counts sum to " + std::to_string(sum) + ", expected n = " +
                                    std::to_string(n));
    }
}

double entropy(const InputType& p, LogBase base) {
    double h = 0.0;
    for (double v : p.probs()) {
        if (v > 0.0) h -= v * log_in(v, base);
    }
    return std::max(h, 0.0);
}

double kl_divergence(const InputType& p, const InputType& q, LogBase base) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("KL divergence requires pmfs of equal length");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        if (q[i] == 0.0) return std::numeric_limits<double>::infinity();
        d += p[i] * log_in(p[i] / q[i], base);
    }
    return std::max(d, 0.0);
}

SymbolCounts rationalize(const InputType& p, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("block length must be >= 1");
    const std::size_t L = p.size();
    std::vector<std::int64_t> counts(L, 0);
    std::vector<double> remainder(L, 0.0);
    std::int64_t assigned = 0;
    for (std::size_t i = 0; i < L; ++i) {
        const double target = static_cast<double>(n) * p[i];
        counts[i] = static_cast<std::int64_t>(std::floor(target));
        remainder[i] = target - static_cast<double>(counts[i]);
        assigned += counts[i];
    }
    std::vector<std::size_t> order(L);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return remainder[a] > remainder[b];
    });
    for (std::int64_t k = 0; k < n - assigned; ++k) {
        counts[order[static_cast<std::size_t>(k)]] += 1;
    }
    return SymbolCounts(std::move(counts), n);
}

boost::multiprecision::cpp_int multinomial_coefficient(const SymbolCounts& c) {
    using boost::multiprecision::cpp_int;
    cpp_int numerator = 1;
    for (std::int64_t k = 2; k <= c.n; ++k) numerator *= k;
    for (std::int64_t count : c.counts) {
        for (std::int64_t k = 2; k <= count; ++k) numerator /= k;
    }
    return numerator;
}

double multinomial_log2(const SymbolCounts& c) {
    using boost::multiprecision::cpp_int;
    const cpp_int value = multinomial_coefficient(c);
    const unsigned bits = boost::multiprecision::msb(value); // value >= 1
    if (bits <= 52) {
        return std::log2(value.convert_to<double>());
    }
    // Keep the top 53 bits so the conversion to double is exact.
    const cpp_int top = value >> (bits - 52);
    return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 52);
}

} // namespace siet
