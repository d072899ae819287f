#include "minbasis/partition.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace minbasis {

Caps caps_from_env() {
    Caps caps;
    if (const char* raw = std::getenv("MINBASIS_WINDOW_CAP")) {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(raw, raw + std::string_view(raw).size(), value);
        if (ec == std::errc{} && *ptr == '\0' && value > 0) caps.window_cap = value;
    }
    return caps;
}

Validation validate_spec(const PartitionSpec& spec, const Caps& caps) {
    Validation v;
    if (spec.h < 2) v.problems.push_back("h must be at least 2");
    if (spec.pattern.empty()) v.problems.push_back("pattern must be nonempty");
    if (spec.prefix.size() > caps.prefix_cap)
        v.problems.push_back("prefix longer than cap " + std::to_string(caps.prefix_cap));
    if (spec.pattern.size() > caps.period_cap)
        v.problems.push_back("period longer than cap " + std::to_string(caps.period_cap));

    auto check_labels = [&](const std::vector<std::uint32_t>& seq, const char* which) {
        for (std::size_t k = 0; k < seq.size(); ++k) {
            if (seq[k] < 1 || seq[k] > spec.h) {
                v.problems.push_back(std::string(which) + "[" + std::to_string(k) +
                                     "] = " + std::to_string(seq[k]) + " out of range [1," +
                                     std::to_string(spec.h) + "]");
            }
        }
    };
    check_labels(spec.prefix, "prefix");
    check_labels(spec.pattern, "pattern");

    if (spec.h >= 2) {
        for (std::uint32_t j = 1; j <= spec.h; ++j) {
            if (std::find(spec.pattern.begin(), spec.pattern.end(), j) == spec.pattern.end())
                v.problems.push_back("part " + std::to_string(j) + " absent from pattern");
        }
    }
    v.ok = v.problems.empty();
    return v;
}

void require_valid(const PartitionSpec& spec, const Caps& caps) {
    Validation v = validate_spec(spec, caps);
    if (!v.ok) {
        std::string joined;
        for (const auto& p : v.problems) {
            if (!joined.empty()) joined += "; ";
            joined += p;
        }
        raise(Errc::rejected, joined);
    }
}

std::uint32_t part_of(const PartitionSpec& spec, std::uint64_t n) {
    if (n < spec.prefix.size()) return spec.prefix[static_cast<std::size_t>(n)];
    return spec.pattern[static_cast<std::size_t>((n - spec.prefix.size()) % spec.pattern.size())];
}

std::uint64_t counting(const PartitionSpec& spec, std::uint32_t j, std::uint64_t x) {
    const std::uint64_t L = spec.prefix.size();
    const std::uint64_t p = spec.pattern.size();
    std::uint64_t count = 0;
    const std::uint64_t in_prefix = std::min(x + 1, L);
    for (std::uint64_t n = 0; n < in_prefix; ++n) count += spec.prefix[n] == j;
    if (x + 1 > L) {
        const std::uint64_t tail = x + 1 - L;
        std::uint64_t per_period = 0;
        for (std::uint32_t label : spec.pattern) per_period += label == j;
        count += (tail / p) * per_period;
        for (std::uint64_t k = 0; k < tail % p; ++k) count += spec.pattern[k] == j;
    }
    return count;
}

const char* condition_kind_name(ConditionKind kind) {
    switch (kind) {
        case ConditionKind::thm1_counting: return "THM1-COUNTING";
        case ConditionKind::thm2_runs: return "THM2-RUNS";
        case ConditionKind::thmB_dichotomy: return "THMB-DICHOTOMY";
        case ConditionKind::thmE_runs: return "THME-RUNS";
    }
    return "?";
}

ConditionReport thm1_condition(const PartitionSpec& spec, std::uint64_t t_max) {
    require_valid(spec);
    if (t_max < 1) raise(Errc::bad_param, "t_max must be at least 1");

    ConditionReport report;
    report.kind = ConditionKind::thm1_counting;
    report.bound = t_max;

    const std::uint32_t h = spec.h;
    auto equal_share_at = [&](std::uint64_t t) {
        for (std::uint32_t j = 1; j <= h; ++j)
            if (counting(spec, j, static_cast<std::uint64_t>(h) * t - 1) != t) return false;
        return true;
    };
    for (std::uint64_t t = 1; t <= t_max; ++t)
        if (equal_share_at(t)) report.witnesses.push_back(t);

    // Analytic path: with no prefix, |W_j(h t - 1)| = (h t / p) rounded down
    // times the per-period count plus a remainder term, so the condition at t
    // depends only on (h t) mod p once every part fills exactly p/h slots per
    // period. (h t) mod p is periodic in t with period p / gcd(p, h).
    if (spec.prefix.empty()) {
        const std::uint64_t p = spec.pattern.size();
        bool balanced = true;
        for (std::uint32_t j = 1; j <= h && balanced; ++j) {
            std::uint64_t per_period = 0;
            for (std::uint32_t label : spec.pattern) per_period += label == j;
            balanced = per_period * h == p;
        }
        if (balanced) {
            const std::uint64_t cycle = p / std::gcd(p, static_cast<std::uint64_t>(h));
            report.modulus = cycle;
            for (std::uint64_t rho = 0; rho < cycle; ++rho) {
                const std::uint64_t t0 = rho == 0 ? cycle : rho;  // smallest t >= 1 in class
                if (equal_share_at(t0)) report.residues.push_back(rho);
            }
            report.periodic_proof = !report.residues.empty();
            report.holds = report.periodic_proof;
        }
    }
    return report;
}

namespace {

// No run of W_j can first start past prefix + one period, so clipping the
// scan there keeps it exact for arbitrarily large x_max.
std::uint64_t run_scan_clip(const PartitionSpec& spec, std::uint32_t r, std::uint64_t x_max) {
    const std::uint64_t horizon =
        spec.prefix.size() + 2 * static_cast<std::uint64_t>(spec.pattern.size()) + r;
    return std::min(x_max, horizon);
}

}  // namespace

std::optional<std::uint64_t> run_condition(const PartitionSpec& spec, std::uint32_t j,
                                           std::uint32_t r, std::uint64_t x_max) {
    require_valid(spec);
    if (r < 1) raise(Errc::bad_param, "run length must be at least 1");
    if (j < 1 || j > spec.h) raise(Errc::bad_param, "part index out of range");

    const std::uint64_t clip = run_scan_clip(spec, r, x_max);
    std::uint64_t run = 0;
    for (std::uint64_t n = 0; n <= clip; ++n) {
        run = part_of(spec, n) == j ? run + 1 : 0;
        if (run >= r) return n + 1 - r;
    }
    return std::nullopt;
}

bool run_exists(const PartitionSpec& spec, std::uint32_t j, std::uint32_t r) {
    const std::uint64_t horizon =
        spec.prefix.size() + 2 * static_cast<std::uint64_t>(spec.pattern.size()) + r;
    return run_condition(spec, j, r, horizon).has_value();
}

std::uint32_t r_of(std::uint32_t h) {
    if (h < 2) raise(Errc::bad_param, "h must be at least 2");
    std::uint32_t r = 0;
    while ((std::uint64_t{1} << r) < static_cast<std::uint64_t>(h) + 1) ++r;
    return r;
}

ConditionReport thm2_condition(const PartitionSpec& spec, std::optional<std::uint64_t> x_max) {
    require_valid(spec);
    ConditionReport report;
    report.kind = ConditionKind::thm2_runs;
    report.run_length = r_of(spec.h);
    report.periodic_proof = !x_max.has_value();  // unbounded check is exact

    const std::uint64_t bound =
        x_max.value_or(spec.prefix.size() + 2 * static_cast<std::uint64_t>(spec.pattern.size()) +
                       report.run_length);
    report.bound = bound;

    bool all_runs = true;
    for (std::uint32_t j = 2; j <= spec.h; ++j) {
        RunWitness w;
        w.part = j;
        w.start = run_condition(spec, j, report.run_length, bound);
        if (w.start) report.witnesses.push_back(*w.start);
        all_runs = all_runs && w.start.has_value();
        report.runs.push_back(w);
    }
    report.holds = all_runs && part_of(spec, 0) == 1;
    return report;
}

ConditionReport run_report(const PartitionSpec& spec, std::uint32_t j, std::uint32_t r,
                           std::uint64_t x_max) {
    ConditionReport report;
    report.kind = ConditionKind::thmE_runs;
    report.run_length = r;
    report.bound = x_max;
    report.periodic_proof = true;  // clip argument makes the scan exact
    RunWitness w;
    w.part = j;
    w.start = run_condition(spec, j, r, x_max);
    if (w.start) report.witnesses.push_back(*w.start);
    report.runs.push_back(w);
    report.holds = w.start.has_value();
    return report;
}

const char* thmB_verdict_name(ThmBVerdict v) {
    return v == ThmBVerdict::minimal ? "MINIMAL" : "NOT-MINIMAL";
}

ThmBReport thmB_predict(const PartitionSpec& spec, std::uint64_t scan_bound) {
    require_valid(spec);
    if (spec.h != 2) raise(Errc::wrong_arity, "dichotomy applies to h = 2 only");
    if (part_of(spec, 0) != 1) raise(Errc::zero_not_in_w1, "0 must lie in W_1");

    ThmBReport report;
    report.bound = std::max<std::uint64_t>(
        scan_bound, spec.prefix.size() + static_cast<std::uint64_t>(spec.pattern.size()) + 2);
    report.w1_pair_start = run_condition(spec, 1, 2, report.bound);
    report.w2_pair_start = run_condition(spec, 2, 2, report.bound);
    report.verdict = (!report.w1_pair_start || report.w2_pair_start) ? ThmBVerdict::minimal
                                                                     : ThmBVerdict::not_minimal;
    return report;
}

PartitionSpec builtin_nathanson(std::uint32_t h) {
    if (h < 2) raise(Errc::bad_param, "nathanson requires h >= 2");
    PartitionSpec spec;
    spec.h = h;
    spec.pattern.resize(h);
    for (std::uint32_t k = 0; k < h; ++k) spec.pattern[k] = k + 1;
    return spec;
}

PartitionSpec builtin_ling_tang(std::uint32_t i) {
    if (i > 5) raise(Errc::bad_param, "ling_tang requires i in 0..5");
    PartitionSpec spec;
    spec.h = 3;
    spec.pattern.resize(6);
    for (std::uint32_t r = 0; r < 6; ++r) {
        const std::uint32_t k = (r + 6 - i) % 6;  // offset from i
        if (k <= 1) spec.pattern[r] = 1;
        else if (k == 2 || k == 4) spec.pattern[r] = 2;
        else spec.pattern[r] = 3;
    }
    return spec;
}

PartitionSpec builtin_sun(std::uint32_t h, std::uint32_t t) {
    if (h < 2 || t < 1) raise(Errc::bad_param, "sun requires h >= 2 and t >= 1");
    const std::uint64_t period = static_cast<std::uint64_t>(h) * t;
    if (period > Caps{}.period_cap) raise(Errc::cap_exceeded, "sun period exceeds cap");
    PartitionSpec spec;
    spec.h = h;
    spec.pattern.resize(period);
    for (std::uint32_t j = 0; j < h; ++j)
        for (std::uint32_t k = 0; k < t; ++k) spec.pattern[static_cast<std::size_t>(j) * t + k] = j + 1;
    return spec;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::uint32_t parse_u32(const std::string& s) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        raise(Errc::bad_param, "not a nonnegative integer: '" + s + "'");
    return value;
}

}  // namespace

bool is_builtin_name(const std::string& name) {
    return name.rfind("nathanson:", 0) == 0 || name.rfind("ling_tang:", 0) == 0 ||
           name.rfind("sun:", 0) == 0;
}

PartitionSpec builtin_by_name(const std::string& name) {
    const auto parts = split(name, ':');
    if (parts.size() == 2 && parts[0] == "nathanson") return builtin_nathanson(parse_u32(parts[1]));
    if (parts.size() == 2 && parts[0] == "ling_tang") return builtin_ling_tang(parse_u32(parts[1]));
    if (parts.size() == 3 && parts[0] == "sun")
        return builtin_sun(parse_u32(parts[1]), parse_u32(parts[2]));
    raise(Errc::bad_param, "unknown builtin '" + name +
                               "' (expected nathanson:h, ling_tang:i or sun:h:t)");
}

std::string spec_key(const PartitionSpec& spec) {
    std::ostringstream os;
    os << "h=" << spec.h << ";prefix=";
    for (std::size_t k = 0; k < spec.prefix.size(); ++k) {
        if (k) os << ',';
        os << spec.prefix[k];
    }
    os << ";pattern=";
    for (std::size_t k = 0; k < spec.pattern.size(); ++k) {
        if (k) os << ',';
        os << spec.pattern[k];
    }
    return os.str();
}

}  // namespace minbasis
