#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "minbasis/partition.hpp"

namespace minbasis {

// The set of 1-bit positions of an integer: n = sum of 2^p over positions.
// Positions are strictly increasing and below 63 so values fit in 64 bits.
struct SupportSet {
    std::vector<std::uint32_t> positions;
};

std::uint64_t pack_support(const SupportSet& support);
SupportSet support_of(std::uint64_t n);

// Part index j when every support position of n lies in W_j; nullopt when
// the support straddles parts (then n is not a basis element).
std::optional<std::uint32_t> classify_element(const PartitionSpec& spec, std::uint64_t n);

// All elements with support contained in W_j ∩ [0, T], ascending. The result
// has 2^|W_j ∩ [0,T]| - 1 entries; |W_j ∩ [0,T]| must not exceed subset_cap.
std::vector<std::uint64_t> enumerate_part_elements(const PartitionSpec& spec, std::uint32_t j,
                                                   std::uint32_t T,
                                                   std::uint32_t subset_cap = Caps{}.subset_cap);

// Splitting of sum-of-distinct-powers targets into groups of term powers:
// disjoint nonempty 1-based index sets J_i with sum_{j in J_i} 2^{terms[j-1]}
// = 2^{targets[i-1]}, plus the unused indices. The leftover indices sum to a
// multiple of 2^{w_s + 1} where w_s is the largest target.
struct Decomposition {
    std::vector<std::uint32_t> targets;
    std::vector<std::uint32_t> terms;
    std::vector<std::vector<std::size_t>> sets;
    std::vector<std::size_t> leftover;
};

// Carry-forest construction. Terms act as leaves; equal-valued nodes merge
// pairwise (lowest value first, ties by lowest smallest leaf index) until a
// node matches the next target, whose leaf set becomes J_i. Deterministic.
// Requires every term < w_s + 1 and the target/term sums congruent mod
// 2^{w_s+1}; under those preconditions it always succeeds.
Decomposition lemma2_decompose(const std::vector<std::uint32_t>& targets,
                               const std::vector<std::uint32_t>& terms);

// Checks every Decomposition invariant in exact arithmetic.
bool verify_decomposition(const Decomposition& d);

}  // namespace minbasis
