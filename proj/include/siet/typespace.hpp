#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace siet {

enum class LogBase { Two, Natural };

/// A pmf over constellation indices: the empirical type of a codeword or of a
/// whole codebook. Entries lie in [0,1] and sum to 1 within 1e-12.
class InputType {
public:
    explicit InputType(std::vector<double> probs);

    static InputType uniform(std::size_t size);
    static InputType point_mass(std::size_t size, std::size_t index);

    const std::vector<double>& probs() const noexcept { return probs_; }
    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_.at(i); }

private:
    std::vector<double> probs_;
};

/// Integer symbol usage counts over a block of n channel uses; sum == n.
struct SymbolCounts {
    std::vector<std::int64_t> counts;
    std::int64_t n = 0;

    SymbolCounts(std::vector<std::int64_t> counts, std::int64_t n);
};

/// -sum p log p with 0 log 0 = 0. Base selects bits vs nats.
double entropy(const InputType& p, LogBase base);

/// sum p log(p/q); +infinity when p puts mass where q has none.
/// Throws std::invalid_argument on length mismatch.
double kl_divergence(const InputType& p, const InputType& q, LogBase base);

/// Largest-remainder rounding of n*p to integer counts summing exactly to n.
/// Ties go to the lower index.
SymbolCounts rationalize(const InputType& p, std::int64_t n);

/// Exact multinomial coefficient n! / prod(counts_l!).
boost::multiprecision::cpp_int multinomial_coefficient(const SymbolCounts& c);

/// log2 of the multinomial coefficient, computed from the exact integer
/// (no floating-point factorials along the way).
double multinomial_log2(const SymbolCounts& c);

} // namespace siet
