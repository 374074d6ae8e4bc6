#include "siet/codec.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

#include "siet/channel.hpp"
#include "siet/errors.hpp"

namespace siet {

namespace {

constexpr std::uint64_t kCodeSeedSalt = 0x636f6465626f6f6bULL;

std::vector<std::int32_t> base_arrangement(const SymbolCounts& counts) {
    std::vector<std::int32_t> w;
    w.reserve(static_cast<std::size_t>(counts.n));
    for (std::size_t l = 0; l < counts.counts.size(); ++l) {
        for (std::int64_t k = 0; k < counts.counts[l]; ++k) {
            w.push_back(static_cast<std::int32_t>(l));
        }
    }
    return w;
}

std::vector<std::vector<std::int32_t>> enumerate_codewords(const SymbolCounts& counts,
                                                           std::uint64_t M) {
    std::vector<std::vector<std::int32_t>> words;
    words.reserve(M);
    std::vector<std::int32_t> w = base_arrangement(counts); // ascending = lexicographic minimum
    words.push_back(w);
    while (words.size() < M && std::next_permutation(w.begin(), w.end())) {
        words.push_back(w);
    }
    return words;
}

} // namespace

HomogeneousCode build_code(const SymbolCounts& counts, std::uint64_t M, BuildMode mode,
                           std::uint64_t seed) {
    if (M < 1) throw std::invalid_argument("a code needs at least one message");
    const auto capacity = multinomial_coefficient(counts);
    if (boost::multiprecision::cpp_int(M) > capacity) {
        throw CapacityError("requested " + std::to_string(M) +
                            " codewords but only " + capacity.str() +
                            " distinct arrangements of these counts exist");
    }

    HomogeneousCode code{counts, {}};
    if (mode == BuildMode::Enumerate) {
        code.codewords = enumerate_codewords(counts, M);
        return code;
    }

    UniformStream rng(NoiseStream{seed ^ kCodeSeedSalt, 0});
    std::set<std::vector<std::int32_t>> seen;
    const std::vector<std::int32_t> base = base_arrangement(counts);
    const std::uint64_t max_attempts = 1000 + 50 * M;
    std::uint64_t attempts = 0;
    while (seen.size() < M && attempts < max_attempts) {
        ++attempts;
        std::vector<std::int32_t> w = base;
        for (std::size_t i = w.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
            std::swap(w[i - 1], w[j]);
        }
        seen.insert(std::move(w));
    }
    if (seen.size() < M) {
        // Rejection stalled: M is close to the arrangement count, so listing
        // is affordable.
        code.codewords = enumerate_codewords(counts, M);
        return code;
    }
    code.codewords.assign(seen.begin(), seen.end());
    return code;
}

InputType code_type(const HomogeneousCode& code) {
    std::vector<double> p(code.counts.counts.size());
    for (std::size_t l = 0; l < p.size(); ++l) {
        p[l] = static_cast<double>(code.counts.counts[l]) / static_cast<double>(code.counts.n);
    }
    return InputType(std::move(p));
}

InputType codeword_type(std::span<const std::int32_t> w, std::size_t L) {
    if (w.empty()) throw std::invalid_argument("codeword must be nonempty");
    std::vector<double> p(L, 0.0);
    for (std::int32_t idx : w) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= L) {
            throw std::invalid_argument("codeword symbol index out of range");
        }
        p[static_cast<std::size_t>(idx)] += 1.0;
    }
    for (double& v : p) v /= static_cast<double>(w.size());
    return InputType(std::move(p));
}

void write_codebook_csv(std::ostream& os, const HomogeneousCode& code) {
    os << "message_id,t,symbol_index\n";
    for (std::size_t i = 0; i < code.codewords.size(); ++i) {
        const auto& w = code.codewords[i];
        for (std::size_t t = 0; t < w.size(); ++t) {
            os << (i + 1) << ',' << (t + 1) << ',' << (w[t] + 1) << '\n';
        }
    }
}

} // namespace siet
