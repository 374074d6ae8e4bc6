#include "siet/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace siet {

Constellation::Constellation(std::vector<Complex> symbols, double peak_power)
    : symbols_(std::move(symbols)), peak_power_(peak_power) {
    if (symbols_.empty()) {
        throw std::invalid_argument("constellation must contain at least one symbol");
    }
    if (!(peak_power_ >= 0.0) || !std::isfinite(peak_power_)) {
        throw std::invalid_argument("peak_power must be a finite nonnegative amplitude");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const Complex x = symbols_[i];
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
            throw std::invalid_argument("symbol " + std::to_string(i) + " is not finite");
        }
        if (std::abs(x) > peak_power_ * (1.0 + 1e-12)) {
            throw std::invalid_argument("symbol " + std::to_string(i) +
                                        " exceeds the peak amplitude bound");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (symbols_[j] == x) {
                throw std::invalid_argument("symbols must be pairwise distinct (duplicate at index " +
                                            std::to_string(i) + ")");
            }
        }
    }
}

std::optional<std::size_t> Constellation::find_index(Complex value, double tol) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (std::abs(symbols_[i] - value) <= tol) {
            return i;
        }
    }
    return std::nullopt;
}

Constellation make_rect_qam(unsigned order, double half_spacing) {
    if (order < 4) {
        throw std::invalid_argument("QAM order must be at least 4");
    }
    const auto side = static_cast<unsigned>(std::lround(std::sqrt(static_cast<double>(order))));
    if (side * side != order) {
        throw std::invalid_argument("QAM order must be a perfect square, got " +
                                    std::to_string(order));
    }
    if (!(half_spacing > 0.0) || !std::isfinite(half_spacing)) {
        throw std::invalid_argument("half_spacing must be positive and finite");
    }

    std::vector<Complex> symbols;
    symbols.reserve(order);
    for (unsigned i = 0; i < side; ++i) {
        // coordinates -(side-1)h, ..., -h, h, ..., (side-1)h
        const double re = (2.0 * static_cast<double>(i) - static_cast<double>(side - 1)) * half_spacing;
        for (unsigned j = 0; j < side; ++j) {
            const double im =
                (2.0 * static_cast<double>(j) - static_cast<double>(side - 1)) * half_spacing;
            symbols.emplace_back(re, im);
        }
    }
    std::sort(symbols.begin(), symbols.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    const double corner = static_cast<double>(side - 1) * half_spacing;
    const double peak = std::hypot(corner, corner);
    return Constellation(std::move(symbols), peak);
}

} // namespace siet
