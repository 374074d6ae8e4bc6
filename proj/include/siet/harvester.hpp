#pragma once

#include <span>

#include "siet/channel.hpp"
#include "siet/constellation.hpp"

namespace siet {

/// Rectifier energy model: g(z) = k2 |h z|^2 + k4 |h z|^4. The quadratic
/// term captures the linear-regime diode response, the quartic term the
/// leading nonlinearity. h_mag is the field gain applied before harvesting.
struct HarvesterModel {
    double k2;
    double k4;
    double h_mag;

    HarvesterModel(double k2_in, double k4_in, double h_mag_in);
};

/// Energy harvested from one channel output sample.
double harvested_energy(Complex z, const HarvesterModel& m);

/// Average harvested energy over a block, in energy units per channel use.
double mean_harvested_energy(std::span<const Complex> z, const HarvesterModel& m);

/// Closed-form E[g(x + W)] over the channel noise W. With s = |h x|^2 and
/// v = |h|^2 sigma2 this is k2 (s + v) + k4 (s^2 + 4 s v + 2 v^2), using the
/// circular Gaussian moments E|W|^2 = sigma2 and E|W|^4 = 2 sigma2^2.
double expected_harvested_energy(Complex x, ChannelParams ch, const HarvesterModel& m);

} // namespace siet
