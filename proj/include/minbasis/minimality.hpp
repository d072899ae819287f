#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minbasis/partition.hpp"
#include "minbasis/sumset.hpp"

namespace minbasis {

enum class WitnessMode { thm1, thm2 };

const char* witness_mode_name(WitnessMode mode);

struct WitnessRecord {
    std::uint64_t a = 0;
    std::uint32_t part = 0;  // i with a ∈ A(W_i)
    std::uint32_t T = 0;
    std::uint64_t n_T = 0;
    bool in_hA = false;
    bool in_hA_minus_a = false;
    bool verified = false;  // in_hA && !in_hA_minus_a
    std::vector<std::string> modes;  // hypothesis routes admitting this T
};

enum class Verdict { theorem_proven, empirical_supported, refuted_in_window };

const char* verdict_name(Verdict v);

struct ElementReport {
    std::uint64_t a = 0;
    std::uint32_t part = 0;
    std::uint64_t e_a_count = 0;                        // |E_a ∩ [0, N]|
    std::optional<std::uint64_t> e_a_above_threshold;   // least E_a member >= n0
    Verdict verdict = Verdict::empirical_supported;
    std::vector<WitnessRecord> witnesses;
};

struct Certificate {
    ConditionReport thm1;
    ConditionReport thm2;
    bool any() const { return thm1.holds || thm2.holds; }
};

struct MinimalityReport {
    std::string spec_id;
    std::uint32_t h = 0;
    std::uint32_t T = 0;
    std::uint64_t N = 0;
    std::uint64_t a_max = 0;
    std::optional<std::uint64_t> coverage;  // threshold n0 of the full hA window
    Certificate certificate;
    std::vector<ElementReport> elements;    // ascending by a
    Verdict global = Verdict::empirical_supported;
};

// E_a = hA \ h(A \ {a}) over [0, N], element-list form. `elements` is the
// basis window; a must occur in it.
std::vector<std::uint64_t> e_a_window_elements(std::span<const std::uint64_t> elements,
                                               std::uint64_t a, std::uint32_t h,
                                               std::uint64_t N, unsigned workers = 1);

// Spec-level E_a over [0, 2^{T+1} - 1].
std::vector<std::uint64_t> e_a_window(const PartitionSpec& spec, std::uint64_t a,
                                      std::uint32_t h, std::uint32_t T,
                                      const Caps& caps = Caps{}, unsigned workers = 1);

// The proofs' witness value a + sum of 2^w over w in [0, T] outside W_i,
// where a ∈ A(W_i). Requires 2^T > a. Mode thm1 additionally requires a
// verified equal-share value t' with t'·h > min support(a) and T >= t'·h;
// mode thm2 requires 0 ∈ W_1 and an r_of(h)-run inside [0, T] for every part
// except i (and except part 1).
std::uint64_t witness(const PartitionSpec& spec, std::uint64_t a, std::uint32_t T,
                      WitnessMode mode);

// Exact membership check of n_T in hA and h(A \ {a}) over a window reaching
// max(n_T, 2^{T+1} - 1); every representation of n_T lies inside it.
WitnessRecord verify_witness(const PartitionSpec& spec, std::uint64_t a, std::uint32_t h,
                             std::uint64_t n_T, std::uint32_t T, const Caps& caps = Caps{},
                             unsigned workers = 1);

// Raw-element variant used for synthetic bases in tests and by the wrapper.
WitnessRecord verify_witness_elements(std::span<const std::uint64_t> elements, std::uint64_t a,
                                      std::uint32_t h, std::uint64_t n_T, unsigned workers = 1);

struct ScanOptions {
    bool attach_witnesses = true;
    unsigned workers = 1;
    Caps caps;
    std::uint64_t thm1_t_max = 64;  // scan bound for the certificate check
};

// Per-element removability evidence for every a ∈ A with a <= a_max:
// REFUTED-IN-WINDOW when E_a is empty at or above the coverage threshold,
// otherwise supported, upgraded to THEOREM-PROVEN under a spec-level
// certificate. Element order (and the report) is independent of workers.
MinimalityReport removability_scan(const PartitionSpec& spec, std::uint32_t h, std::uint32_t T,
                                   std::uint64_t a_max, const ScanOptions& options = ScanOptions{});

}  // namespace minbasis
