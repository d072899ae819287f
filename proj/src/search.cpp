#include "minbasis/search.hpp"

#include <algorithm>
#include <cmath>

namespace minbasis {

namespace {

// Odometer increment over labels 1..h; returns false on wraparound.
bool next_word(std::vector<std::uint32_t>& word, std::uint32_t h) {
    for (std::size_t k = word.size(); k-- > 0;) {
        if (word[k] < h) {
            ++word[k];
            std::fill(word.begin() + k + 1, word.end(), 1u);
            return true;
        }
    }
    return false;
}

bool surjective(const std::vector<std::uint32_t>& word, std::uint32_t h) {
    std::vector<char> seen(h + 1, 0);
    for (std::uint32_t label : word) seen[label] = 1;
    for (std::uint32_t j = 1; j <= h; ++j)
        if (!seen[j]) return false;
    return true;
}

}  // namespace

std::vector<PartitionSpec> enumerate_periodic_specs(std::uint32_t h, std::uint32_t p,
                                                    std::uint32_t prefix_len,
                                                    std::uint64_t enumeration_cap) {
    if (h < 2) raise(Errc::bad_param, "h must be at least 2");
    if (p < 1) raise(Errc::bad_param, "period must be at least 1");

    const double space = std::pow(static_cast<double>(h), static_cast<double>(p) + prefix_len);
    if (space > static_cast<double>(enumeration_cap))
        raise(Errc::space_too_large, "h^(p+prefix_len) exceeds enumeration cap");

    std::vector<PartitionSpec> specs;
    if (p < h) return specs;  // some part would be absent from the pattern

    std::vector<std::uint32_t> prefix(prefix_len, 1u);
    bool more_prefix = true;
    while (more_prefix) {
        std::vector<std::uint32_t> pattern(p, 1u);
        bool more_pattern = true;
        while (more_pattern) {
            if (surjective(pattern, h)) {
                PartitionSpec spec;
                spec.h = h;
                spec.prefix = prefix;
                spec.pattern = pattern;
                specs.push_back(std::move(spec));
            }
            more_pattern = next_word(pattern, h);
        }
        more_prefix = prefix_len > 0 && next_word(prefix, h);
        if (prefix_len == 0) break;
    }
    return specs;
}

PartitionSpec canonicalize(const PartitionSpec& spec) {
    PartitionSpec out = spec;

    // Primitive period: smallest divisor d with pattern[i] == pattern[i mod d].
    const std::size_t p = out.pattern.size();
    for (std::size_t d = 1; d <= p; ++d) {
        if (p % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < p && periodic; ++i) periodic = out.pattern[i] == out.pattern[i % d];
        if (periodic) {
            out.pattern.resize(d);
            break;
        }
    }

    // Absorb prefix entries that already match the periodic continuation:
    // dropping the last prefix entry rotates the pattern right by one.
    while (!out.prefix.empty() && out.prefix.back() == out.pattern.back()) {
        out.pattern.insert(out.pattern.begin(), out.pattern.back());
        out.pattern.pop_back();
        out.prefix.pop_back();
    }
    return out;
}

PartitionSpec quotient_labels(const PartitionSpec& spec) {
    PartitionSpec out = spec;
    std::vector<std::uint32_t> remap(spec.h + 1, 0);
    std::uint32_t next = 0;
    auto visit = [&](std::uint32_t label) {
        if (remap[label] == 0) remap[label] = ++next;
    };
    for (std::uint32_t label : spec.prefix) visit(label);
    for (std::uint32_t label : spec.pattern) visit(label);
    for (auto& label : out.prefix) label = remap[label];
    for (auto& label : out.pattern) label = remap[label];
    return out;
}

ClassificationRow classify_one(const PartitionSpec& spec, std::uint32_t T,
                               const SweepOptions& options) {
    ClassificationRow row;
    row.spec = spec;
    row.spec_key = spec_key(spec);
    row.thm1 = thm1_condition(spec, options.t_max);
    row.thm2 = thm2_condition(spec);

    if (spec.h == 2) {
        if (part_of(spec, 0) == 1) {
            row.thmB = thmB_predict(spec, T);
        } else {
            // Swap labels so the dichotomy's 0 ∈ W_1 convention applies; the
            // basis set itself is unchanged by relabeling.
            PartitionSpec swapped = spec;
            for (auto& label : swapped.prefix) label = 3 - label;
            for (auto& label : swapped.pattern) label = 3 - label;
            row.thmB = thmB_predict(swapped, T);
            row.thmB_relabeled = true;
        }
    }

    ScanOptions scan = options.scan;
    MinimalityReport report = removability_scan(spec, spec.h, T, options.a_max, scan);
    row.coverage = report.coverage;
    for (const auto& element : report.elements)
        if (element.verdict == Verdict::refuted_in_window) row.removable.push_back(element.a);

    const bool predicted_minimal =
        row.thm1.holds || row.thm2.holds ||
        (row.thmB && row.thmB->verdict == ThmBVerdict::minimal);
    row.anomaly = predicted_minimal && !row.removable.empty();
    return row;
}

std::vector<ClassificationRow> classify_partitions(
    std::span<const PartitionSpec> specs, std::uint32_t T, const SweepOptions& options,
    const std::function<void(const ClassificationRow&)>& on_row) {
    std::vector<ClassificationRow> rows;
    rows.reserve(specs.size());
    for (const PartitionSpec& spec : specs) {
        rows.push_back(classify_one(spec, T, options));
        if (on_row) on_row(rows.back());
    }
    return rows;
}

}  // namespace minbasis
