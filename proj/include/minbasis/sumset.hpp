#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "minbasis/partition.hpp"

namespace minbasis {

// Exact membership bit array over [0, N].
class WindowSet {
public:
    WindowSet() = default;
    explicit WindowSet(std::uint64_t bound)
        : bound_(bound), words_((bound / 64) + 1, 0) {}

    std::uint64_t bound() const { return bound_; }

    bool test(std::uint64_t n) const {
        return (words_[n >> 6] >> (n & 63)) & 1u;
    }
    void set(std::uint64_t n) { words_[n >> 6] |= std::uint64_t{1} << (n & 63); }

    std::size_t word_count() const { return words_.size(); }
    const std::uint64_t* words() const { return words_.data(); }
    std::uint64_t* words() { return words_.data(); }

    // Zeroes the bits above `bound` in the last word.
    void mask_tail();

    std::uint64_t popcount() const;

    friend bool operator==(const WindowSet&, const WindowSet&) = default;

private:
    std::uint64_t bound_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BasisWindow {
    std::vector<std::uint64_t> elements;  // ascending; the union over all parts
    WindowSet window;                     // membership over [0, 2^{T+1} - 1]
};

// All basis elements with support in [0, T], as a sorted list plus its
// membership window with N = 2^{T+1} - 1.
BasisWindow build_basis_window(const PartitionSpec& spec, std::uint32_t T,
                               const Caps& caps = Caps{});

// Membership of the h-fold sumset of `elements` over [0, N], computed by
// iterated shift-or. Exact. `workers` may split the element list; partial
// windows are OR-combined, so the output is identical for any split.
WindowSet h_fold_sumset(std::span<const std::uint64_t> elements, std::uint32_t h,
                        std::uint64_t N, unsigned workers = 1);

// All n in [lo, hi] missing from the window.
std::vector<std::uint64_t> gaps(const WindowSet& window, std::uint64_t lo, std::uint64_t hi);

// Least n0 such that [n0, N] is fully covered; nullopt when the window's own
// bound N is uncovered.
std::optional<std::uint64_t> coverage_threshold(const WindowSet& window);

}  // namespace minbasis
