#include "siet/harvester.hpp"

#include <cmath>
#include <stdexcept>

namespace siet {

HarvesterModel::HarvesterModel(double k2_in, double k4_in, double h_mag_in)
    : k2(k2_in), k4(k4_in), h_mag(h_mag_in) {
    if (!(k2 >= 0.0) || !(k4 >= 0.0) || !std::isfinite(k2) || !std::isfinite(k4)) {
        throw std::invalid_argument("harvester coefficients must be finite and nonnegative");
    }
    if (!(k2 + k4 > 0.0)) {
        throw std::invalid_argument("harvester needs at least one positive coefficient");
    }
    if (!(h_mag > 0.0) || !std::isfinite(h_mag)) {
        throw std::invalid_argument("harvester channel gain must be positive and finite");
    }
}

double harvested_energy(Complex z, const HarvesterModel& m) {
    const double s = m.h_mag * m.h_mag * symbol_energy(z);
    return m.k2 * s + m.k4 * s * s;
}

double mean_harvested_energy(std::span<const Complex> z, const HarvesterModel& m) {
    if (z.empty()) throw std::invalid_argument("block must contain at least one sample");
    double sum = 0.0;
    for (Complex v : z) sum += harvested_energy(v, m);
    return sum / static_cast<double>(z.size());
}

double expected_harvested_energy(Complex x, ChannelParams ch, const HarvesterModel& m) {
    const double gain2 = m.h_mag * m.h_mag;
    const double s = gain2 * symbol_energy(x);
    const double v = gain2 * ch.sigma2;
    return m.k2 * (s + v) + m.k4 * (s * s + 4.0 * s * v + 2.0 * v * v);
}

} // namespace siet
