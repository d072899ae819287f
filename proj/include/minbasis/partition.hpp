#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minbasis/config.hpp"
#include "minbasis/error.hpp"

namespace minbasis {

/// A partition of the nonnegative integers into h parts W_1, ..., W_h,
/// given as a finite explicit prefix followed by an eventually periodic tail.
///
/// n < prefix.size()   ->  part prefix[n]
/// n >= prefix.size()  ->  part pattern[(n - prefix.size()) % pattern.size()]
///
/// Labels are 1-based. A spec is valid when every label lies in [1, h] and
/// every part occurs at least once in the pattern (so each part is infinite).
struct PartitionSpec {
    std::uint32_t h = 0;
    std::vector<std::uint32_t> prefix;
    std::vector<std::uint32_t> pattern;

    std::uint32_t period() const { return static_cast<std::uint32_t>(pattern.size()); }
};

struct Validation {
    bool ok = false;
    std::vector<std::string> problems;
};

/// Checks all PartitionSpec invariants; lists every violation found.
Validation validate_spec(const PartitionSpec& spec, const Caps& caps = Caps{});

/// Throws Errc::rejected with the collected problems if the spec is invalid.
void require_valid(const PartitionSpec& spec, const Caps& caps = Caps{});

/// Part index of n. Total and deterministic; spec must be valid.
std::uint32_t part_of(const PartitionSpec& spec, std::uint64_t n);

/// Counting function |W_j ∩ [0, x]|. Cost is O(prefix + period), independent
/// of x, via whole-period counts plus a remainder scan.
std::uint64_t counting(const PartitionSpec& spec, std::uint32_t j, std::uint64_t x);

enum class ConditionKind { thm1_counting, thm2_runs, thmB_dichotomy, thmE_runs };

const char* condition_kind_name(ConditionKind kind);

struct RunWitness {
    std::uint32_t part = 0;
    std::optional<std::uint64_t> start;  // least run start, if a run exists
};

/// Outcome of a hypothesis check. `witnesses` holds the verified parameter
/// values found by scanning up to `bound`. `periodic_proof` is set only when
/// the condition was decided exactly from the periodic structure, in which
/// case it holds for every parameter in the reported residue classes and
/// `holds` certifies the "infinitely many" reading.
struct ConditionReport {
    ConditionKind kind = ConditionKind::thm1_counting;
    bool holds = false;
    bool periodic_proof = false;
    std::uint64_t bound = 0;
    std::vector<std::uint64_t> witnesses;  // t values (counting) or run starts
    std::uint64_t modulus = 0;             // counting kind: class modulus for t
    std::vector<std::uint64_t> residues;   // counting kind: certified classes mod `modulus`
    std::uint32_t run_length = 0;          // run kinds: r
    std::vector<RunWitness> runs;          // run kinds: per-part least starts
};

/// Equal-share counting condition: all t <= t_max with |W_j(h·t - 1)| = t for
/// every part j simultaneously. For purely periodic specs the condition is a
/// function of t mod (period / gcd(period, h)) whenever each part fills
/// exactly period/h slots per cycle; in that case the certified residue
/// classes are reported and periodic_proof is set.
ConditionReport thm1_condition(const PartitionSpec& spec, std::uint64_t t_max);

/// Least b such that {b, ..., b+r-1} ⊆ W_j and b+r-1 <= x_max, or absent.
/// The scan is clipped to prefix + two periods, past which no new run starts
/// can appear, so the result is exact for every x_max.
std::optional<std::uint64_t> run_condition(const PartitionSpec& spec, std::uint32_t j,
                                           std::uint32_t r, std::uint64_t x_max);

/// Whether W_j contains r consecutive integers anywhere. Exact.
bool run_exists(const PartitionSpec& spec, std::uint32_t j, std::uint32_t r);

/// Smallest r with 2^r >= h + 1, in exact integer arithmetic.
std::uint32_t r_of(std::uint32_t h);

/// Run-length condition for parts 2..h at length r_of(h), plus the 0 ∈ W_1
/// requirement. Decided exactly; x_max, when given, restricts run starts to
/// runs contained in [0, x_max].
ConditionReport thm2_condition(const PartitionSpec& spec,
                               std::optional<std::uint64_t> x_max = std::nullopt);

/// Single-part run report at caller-chosen run length r.
ConditionReport run_report(const PartitionSpec& spec, std::uint32_t j, std::uint32_t r,
                           std::uint64_t x_max);

enum class ThmBVerdict { minimal, not_minimal };

const char* thmB_verdict_name(ThmBVerdict v);

struct ThmBReport {
    ThmBVerdict verdict = ThmBVerdict::minimal;
    std::optional<std::uint64_t> w1_pair_start;  // least n with n, n+1 ∈ W_1
    std::optional<std::uint64_t> w2_pair_start;
    std::uint64_t bound = 0;  // scan bound actually used
};

/// Two-part dichotomy: MINIMAL iff W_1 has no consecutive pair or W_2 has
/// one. Requires h = 2 and 0 ∈ W_1. The scan bound is widened to cover the
/// prefix plus one full period, so the verdict is exact.
ThmBReport thmB_predict(const PartitionSpec& spec, std::uint64_t scan_bound);

/// Built-in partition families.
PartitionSpec builtin_nathanson(std::uint32_t h);
PartitionSpec builtin_ling_tang(std::uint32_t i);
PartitionSpec builtin_sun(std::uint32_t h, std::uint32_t t);

/// Parses "nathanson:h", "ling_tang:i" or "sun:h:t".
PartitionSpec builtin_by_name(const std::string& name);

/// True when the name looks like a builtin reference (used by the CLI to
/// distinguish names from file paths).
bool is_builtin_name(const std::string& name);

/// Canonical one-line identifier, e.g. "h=2;prefix=;pattern=1,2".
std::string spec_key(const PartitionSpec& spec);

}  // namespace minbasis
