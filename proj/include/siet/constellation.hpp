#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace siet {

using Complex = std::complex<double>;

/// |x|^2 of a channel input symbol.
inline double symbol_energy(Complex x) noexcept {
    return x.real() * x.real() + x.imag() * x.imag();
}

/// A finite, ordered set of complex channel-input symbols together with the
/// peak amplitude bound every symbol must respect. Index l in [0, size())
/// identifies the same symbol everywhere downstream (pmfs, counts, region
/// probabilities are arrays aligned to this index).
class Constellation {
public:
    /// Validates: at least one symbol, all finite, pairwise distinct,
    /// |x| <= peak_power for every symbol.
    Constellation(std::vector<Complex> symbols, double peak_power);

    std::size_t size() const noexcept { return symbols_.size(); }
    Complex symbol(std::size_t index) const { return symbols_.at(index); }
    const std::vector<Complex>& symbols() const noexcept { return symbols_; }
    double peak_power() const noexcept { return peak_power_; }

    /// Index of the symbol matching (re, im) within tolerance, if any.
    std::optional<std::size_t> find_index(Complex value, double tol = 1e-9) const;

private:
    std::vector<Complex> symbols_;
    double peak_power_;
};

/// Square QAM grid with coordinates +-(2k-1)*half_spacing on each axis.
/// Symbols are ordered by (re, im) ascending so the layout is deterministic;
/// look symbols up by value with find_index when a specific point matters.
/// peak_power is the corner magnitude. order must be a perfect square >= 4.
Constellation make_rect_qam(unsigned order, double half_spacing);

} // namespace siet
