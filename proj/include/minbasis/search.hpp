#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minbasis/minimality.hpp"
#include "minbasis/partition.hpp"

namespace minbasis {

struct ClassificationRow {
    std::string spec_key;
    PartitionSpec spec;
    ConditionReport thm1;
    ConditionReport thm2;
    std::optional<ThmBReport> thmB;  // h = 2 only
    bool thmB_relabeled = false;     // prediction computed on swapped labels
    std::optional<std::uint64_t> coverage;
    std::vector<std::uint64_t> removable;  // a values refuted in window
    bool anomaly = false;  // a theorem predicted minimal yet something was removable
};

// All valid specs with exactly the given period and prefix length, in
// lexicographic (prefix, pattern) order. Distinct tuples define distinct
// assignment functions at fixed sizes, so no further dedup is needed here.
std::vector<PartitionSpec> enumerate_periodic_specs(std::uint32_t h, std::uint32_t p,
                                                    std::uint32_t prefix_len,
                                                    std::uint64_t enumeration_cap =
                                                        Caps{}.enumeration_cap);

// Shrinks the pattern to its primitive period and absorbs any prefix tail
// that already matches the periodic continuation. Two specs describe the
// same assignment function iff their canonical forms are identical.
PartitionSpec canonicalize(const PartitionSpec& spec);

// Relabels parts by first appearance over prefix+pattern (for sweeps that
// quotient label permutations).
PartitionSpec quotient_labels(const PartitionSpec& spec);

struct SweepOptions {
    std::uint64_t t_max = 40;    // thm1 scan bound
    std::uint64_t a_max = 64;    // removability scan bound
    ScanOptions scan;            // witnesses off by default for sweeps
    SweepOptions() { scan.attach_witnesses = false; }
};

ClassificationRow classify_one(const PartitionSpec& spec, std::uint32_t T,
                               const SweepOptions& options = SweepOptions{});

// One row per spec, in input order. The row consumer, when given, sees each
// row as it is produced (the CLI uses this to checkpoint sweep files).
std::vector<ClassificationRow> classify_partitions(
    std::span<const PartitionSpec> specs, std::uint32_t T,
    const SweepOptions& options = SweepOptions{},
    const std::function<void(const ClassificationRow&)>& on_row = nullptr);

}  // namespace minbasis
