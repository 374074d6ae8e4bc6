#include "siet/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace siet {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

} // namespace

ChannelParams::ChannelParams(double sigma2_in) : sigma2(sigma2_in) {
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
        throw std::invalid_argument("noise variance sigma2 must be positive and finite");
    }
}

UniformStream::UniformStream(NoiseStream stream)
    : state_(mix64(stream.seed + kGolden) ^ mix64(stream.stream_id * kGolden + 0x6a09e667f3bcc909ULL)) {}

std::uint64_t UniformStream::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double UniformStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t UniformStream::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be >= 1");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
        const std::uint64_t v = next_u64();
        if (v < limit) return v % bound;
    }
}

Complex UniformStream::next_cscg(double sigma2) {
    const double u1 = 1.0 - next_unit(); // (0, 1]: keeps log finite
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1)) * std::sqrt(sigma2 / 2.0);
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

double log_density(Complex y, Complex x, ChannelParams ch) {
    const double dr = y.real() - x.real();
    const double di = y.imag() - x.imag();
    return -std::log(std::numbers::pi * ch.sigma2) - (dr * dr + di * di) / ch.sigma2;
}

std::vector<Complex> sample_noise(ChannelParams ch, NoiseStream stream, std::size_t count) {
    UniformStream rng(stream);
    std::vector<Complex> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(rng.next_cscg(ch.sigma2));
    }
    return out;
}

} // namespace siet
