#pragma once

#include <cstdint>
#include <vector>

#include "siet/constellation.hpp"

namespace siet {

/// Memoryless complex AWGN channel. sigma2 is the total noise variance: the
/// real and imaginary parts are independent zero-mean Gaussians with variance
/// sigma2/2 each.
struct ChannelParams {
    double sigma2;

    explicit ChannelParams(double sigma2_in);
};

/// Identifies one reproducible noise sequence. Identical (seed, stream_id)
/// always reproduce identical draws, so concurrent workers get disjoint
/// streams by using distinct stream ids.
struct NoiseStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

/// SplitMix64 sequence keyed by (seed, stream_id). Uniform doubles use the
/// top 53 bits; Gaussians come from the Box-Muller transform of consecutive
/// uniforms, so output is bit-reproducible for a given build.
class UniformStream {
public:
    explicit UniformStream(NoiseStream stream);

    std::uint64_t next_u64();
    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit();
    /// Uniform integer in [0, bound), unbiased (rejection). bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);
    /// One circularly symmetric complex Gaussian with total variance sigma2.
    Complex next_cscg(double sigma2);

private:
    std::uint64_t state_;
};

/// Natural log of the channel transition density:
/// -log(pi sigma2) - |y - x|^2 / sigma2.
double log_density(Complex y, Complex x, ChannelParams ch);

/// count i.i.d. complex noise draws with total variance ch.sigma2.
std::vector<Complex> sample_noise(ChannelParams ch, NoiseStream stream, std::size_t count);

} // namespace siet
