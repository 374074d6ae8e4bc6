#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "siet/typespace.hpp"

namespace siet {

/// A codebook in which every codeword is a distinct arrangement of the same
/// symbol multiset, so all codewords induce one shared type. Codewords store
/// 0-based symbol indices; message i (1-based in dumps) is codewords[i-1].
struct HomogeneousCode {
    SymbolCounts counts;
    std::vector<std::vector<std::int32_t>> codewords;

    std::size_t message_count() const noexcept { return codewords.size(); }
    std::int64_t block_length() const noexcept { return counts.n; }
};

enum class BuildMode { Enumerate, Sample };

/// Builds M distinct codewords with the given per-symbol counts.
/// Enumerate lists the first M arrangements in lexicographic order; Sample
/// draws M distinct uniform arrangements (deterministic for a given seed),
/// falling back to enumeration if rejection stalls near the capacity limit.
/// Throws CapacityError naming the multinomial value when M is too large.
HomogeneousCode build_code(const SymbolCounts& counts, std::uint64_t M, BuildMode mode,
                           std::uint64_t seed = 1);

/// The type shared by all codewords: counts_l / n.
InputType code_type(const HomogeneousCode& code);

/// Empirical symbol frequencies of one index sequence over an alphabet of
/// size L.
InputType codeword_type(std::span<const std::int32_t> w, std::size_t L);

/// CSV dump with columns message_id,t,symbol_index (all 1-based).
void write_codebook_csv(std::ostream& os, const HomogeneousCode& code);

} // namespace siet
