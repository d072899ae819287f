#include "minbasis/radix.hpp"

#include <algorithm>
#include <bit>

namespace minbasis {

namespace {

constexpr std::uint32_t kMaxPosition = 62;  // values stay within uint64_t

using u128 = unsigned __int128;

}  // namespace

std::uint64_t pack_support(const SupportSet& support) {
    if (support.positions.empty()) raise(Errc::empty_support, "support set is empty");
    std::uint64_t value = 0;
    std::uint32_t previous = 0;
    bool first = true;
    for (std::uint32_t pos : support.positions) {
        if (!first && pos <= previous)
            raise(Errc::rejected, "support positions must be strictly increasing");
        if (pos > kMaxPosition) raise(Errc::cap_exceeded, "support position above 62");
        value |= std::uint64_t{1} << pos;
        previous = pos;
        first = false;
    }
    return value;
}

SupportSet support_of(std::uint64_t n) {
    if (n == 0) raise(Errc::nonpositive, "support is defined for positive integers");
    SupportSet support;
    while (n) {
        const int pos = std::countr_zero(n);
        support.positions.push_back(static_cast<std::uint32_t>(pos));
        n &= n - 1;
    }
    return support;
}

std::optional<std::uint32_t> classify_element(const PartitionSpec& spec, std::uint64_t n) {
    require_valid(spec);
    const SupportSet support = support_of(n);
    const std::uint32_t j = part_of(spec, support.positions.front());
    for (std::uint32_t pos : support.positions)
        if (part_of(spec, pos) != j) return std::nullopt;
    return j;
}

std::vector<std::uint64_t> enumerate_part_elements(const PartitionSpec& spec, std::uint32_t j,
                                                   std::uint32_t T, std::uint32_t subset_cap) {
    require_valid(spec);
    if (j < 1 || j > spec.h) raise(Errc::bad_param, "part index out of range");
    if (T > kMaxPosition) raise(Errc::cap_exceeded, "T above 62");

    std::vector<std::uint32_t> positions;
    for (std::uint32_t w = 0; w <= T; ++w)
        if (part_of(spec, w) == j) positions.push_back(w);
    if (positions.size() > subset_cap)
        raise(Errc::cap_exceeded, "part has " + std::to_string(positions.size()) +
                                      " positions in window, cap is " + std::to_string(subset_cap));

    const std::uint32_t k = static_cast<std::uint32_t>(positions.size());
    std::vector<std::uint64_t> elements;
    if (k == 0) return elements;
    elements.reserve((std::size_t{1} << k) - 1);
    // Depositing the bits of m into the selected positions preserves order,
    // so the output is already ascending.
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
        std::uint64_t value = 0;
        std::uint64_t bits = m;
        while (bits) {
            value |= std::uint64_t{1} << positions[std::countr_zero(bits)];
            bits &= bits - 1;
        }
        elements.push_back(value);
    }
    return elements;
}

namespace {

struct ForestNode {
    std::vector<std::size_t> leaves;  // sorted 1-based term indices
    std::size_t min_index() const { return leaves.front(); }
};

std::vector<std::size_t> merge_sorted(const std::vector<std::size_t>& a,
                                      const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

Decomposition lemma2_decompose(const std::vector<std::uint32_t>& targets,
                               const std::vector<std::uint32_t>& terms) {
    if (targets.empty()) raise(Errc::bad_param, "at least one target required");
    for (std::size_t i = 1; i < targets.size(); ++i)
        if (targets[i] <= targets[i - 1])
            raise(Errc::bad_param, "targets must be strictly increasing");
    const std::uint32_t w_s = targets.back();
    if (w_s > kMaxPosition) raise(Errc::cap_exceeded, "target position above 62");
    for (std::uint32_t x : terms)
        if (x >= w_s + 1)
            raise(Errc::precondition_violated,
                  "term 2^" + std::to_string(x) + " not below 2^" + std::to_string(w_s + 1));

    const u128 modulus = u128{1} << (w_s + 1);
    u128 target_sum = 0;
    for (std::uint32_t w : targets) target_sum += u128{1} << w;
    u128 term_sum = 0;
    for (std::uint32_t x : terms) term_sum += u128{1} << x;
    if (target_sum % modulus != term_sum % modulus)
        raise(Errc::precondition_violated, "target and term sums differ mod 2^(w_s+1)");

    // One bucket of nodes per level k; a node at level k is worth 2^k.
    std::vector<std::vector<ForestNode>> levels(static_cast<std::size_t>(w_s) + 2);
    for (std::size_t j = 0; j < terms.size(); ++j)
        levels[terms[j]].push_back(ForestNode{{j + 1}});

    Decomposition result;
    result.targets = targets;
    result.terms = terms;
    result.sets.resize(targets.size());

    std::size_t next_target = 0;
    for (std::uint32_t k = 0; k <= w_s; ++k) {
        auto& bucket = levels[k];
        std::sort(bucket.begin(), bucket.end(),
                  [](const ForestNode& a, const ForestNode& b) { return a.min_index() < b.min_index(); });
        if (next_target < targets.size() && targets[next_target] == k) {
            if (bucket.empty())
                raise(Errc::infeasible, "no node of value 2^" + std::to_string(k) +
                                            " available; this indicates a bug");
            result.sets[next_target] = bucket.front().leaves;
            bucket.erase(bucket.begin());
            ++next_target;
        }
        while (bucket.size() >= 2) {
            ForestNode merged{merge_sorted(bucket[0].leaves, bucket[1].leaves)};
            bucket.erase(bucket.begin(), bucket.begin() + 2);
            levels[k + 1].push_back(std::move(merged));
        }
    }

    std::vector<std::size_t> used;
    for (const auto& set : result.sets) used.insert(used.end(), set.begin(), set.end());
    std::sort(used.begin(), used.end());
    for (std::size_t j = 1; j <= terms.size(); ++j)
        if (!std::binary_search(used.begin(), used.end(), j)) result.leftover.push_back(j);

    if (!verify_decomposition(result))
        raise(Errc::infeasible, "constructed decomposition failed verification; this indicates a bug");
    return result;
}

bool verify_decomposition(const Decomposition& d) {
    if (d.targets.empty()) return false;
    for (std::size_t i = 1; i < d.targets.size(); ++i)
        if (d.targets[i] <= d.targets[i - 1]) return false;
    const std::uint32_t w_s = d.targets.back();
    if (w_s > kMaxPosition) return false;
    for (std::uint32_t x : d.terms)
        if (x >= w_s + 1) return false;
    if (d.sets.size() != d.targets.size()) return false;

    std::vector<char> seen(d.terms.size() + 1, 0);
    auto claim = [&](std::size_t index) {
        if (index < 1 || index > d.terms.size() || seen[index]) return false;
        seen[index] = 1;
        return true;
    };

    for (std::size_t i = 0; i < d.sets.size(); ++i) {
        if (d.sets[i].empty()) return false;
        u128 sum = 0;
        for (std::size_t index : d.sets[i]) {
            if (!claim(index)) return false;
            sum += u128{1} << d.terms[index - 1];
        }
        if (sum != (u128{1} << d.targets[i])) return false;
    }

    u128 leftover_sum = 0;
    for (std::size_t index : d.leftover) {
        if (!claim(index)) return false;
        leftover_sum += u128{1} << d.terms[index - 1];
    }
    for (std::size_t j = 1; j <= d.terms.size(); ++j)
        if (!seen[j]) return false;  // leftover must list every unused index

    return leftover_sum % (u128{1} << (w_s + 1)) == 0;
}

}  // namespace minbasis
