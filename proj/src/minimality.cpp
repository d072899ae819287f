#include "minbasis/minimality.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "minbasis/radix.hpp"

namespace minbasis {

const char* witness_mode_name(WitnessMode mode) {
    return mode == WitnessMode::thm1 ? "thm1" : "thm2";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::theorem_proven: return "THEOREM-PROVEN";
        case Verdict::empirical_supported: return "EMPIRICAL-SUPPORTED";
        case Verdict::refuted_in_window: return "REFUTED-IN-WINDOW";
    }
    return "?";
}

std::vector<std::uint64_t> e_a_window_elements(std::span<const std::uint64_t> elements,
                                               std::uint64_t a, std::uint32_t h, std::uint64_t N,
                                               unsigned workers) {
    if (!std::binary_search(elements.begin(), elements.end(), a))
        raise(Errc::not_a_basis_element, std::to_string(a) + " is not in the element window");
    std::vector<std::uint64_t> without;
    without.reserve(elements.size() - 1);
    for (std::uint64_t e : elements)
        if (e != a) without.push_back(e);

    const WindowSet all = h_fold_sumset(elements, h, N, workers);
    const WindowSet reduced = h_fold_sumset(without, h, N, workers);
    std::vector<std::uint64_t> members;
    for (std::uint64_t n = 0; n <= N; ++n)
        if (all.test(n) && !reduced.test(n)) members.push_back(n);
    return members;
}

std::vector<std::uint64_t> e_a_window(const PartitionSpec& spec, std::uint64_t a, std::uint32_t h,
                                      std::uint32_t T, const Caps& caps, unsigned workers) {
    if (!classify_element(spec, a))
        raise(Errc::not_a_basis_element,
              std::to_string(a) + " has support straddling parts; not a basis element");
    BasisWindow bw = build_basis_window(spec, T, caps);
    if (a > bw.window.bound())
        raise(Errc::not_a_basis_element, std::to_string(a) + " lies outside the T-window");
    return e_a_window_elements(bw.elements, a, h, bw.window.bound(), workers);
}

std::uint64_t witness(const PartitionSpec& spec, std::uint64_t a, std::uint32_t T,
                      WitnessMode mode) {
    const auto part = classify_element(spec, a);
    if (!part)
        raise(Errc::not_a_basis_element,
              std::to_string(a) + " has support straddling parts; no witness defined");
    const std::uint32_t i = *part;
    if (T > 61) raise(Errc::cap_exceeded, "T above 61");
    if (!((std::uint64_t{1} << T) > a)) raise(Errc::t_too_small, "need 2^T > a");

    const std::uint32_t h = spec.h;
    if (mode == WitnessMode::thm1) {
        // The proofs pick the next verified equal-share value past min K.
        const std::uint64_t min_k = support_of(a).positions.front();
        const std::uint64_t t_cap = T / h;
        std::optional<std::uint64_t> chosen;
        if (t_cap >= 1) {
            const ConditionReport report = thm1_condition(spec, t_cap);
            for (std::uint64_t t : report.witnesses) {
                if (t * h > min_k) {
                    chosen = t;
                    break;
                }
            }
        }
        if (!chosen)
            raise(Errc::condition_unavailable,
                  "no verified equal-share t with t*h in (min support, T]");
    } else {
        if (part_of(spec, 0) != 1) raise(Errc::zero_not_in_w1, "0 must lie in W_1");
        const std::uint32_t r = r_of(h);
        for (std::uint32_t j = 2; j <= h; ++j) {
            if (j == i) continue;
            if (!run_condition(spec, j, r, T))
                raise(Errc::condition_unavailable,
                      "W_" + std::to_string(j) + " has no run of length " + std::to_string(r) +
                          " inside [0, T]");
        }
    }

    std::uint64_t value = a;
    for (std::uint32_t w = 0; w <= T; ++w)
        if (part_of(spec, w) != i) value += std::uint64_t{1} << w;
    return value;
}

WitnessRecord verify_witness_elements(std::span<const std::uint64_t> elements, std::uint64_t a,
                                      std::uint32_t h, std::uint64_t n_T, unsigned workers) {
    WitnessRecord record;
    record.a = a;
    record.n_T = n_T;
    const std::uint64_t N = elements.empty() ? n_T : std::max(n_T, elements.back());
    const WindowSet all = h_fold_sumset(elements, h, N, workers);
    std::vector<std::uint64_t> without;
    without.reserve(elements.size());
    for (std::uint64_t e : elements)
        if (e != a) without.push_back(e);
    const WindowSet reduced = h_fold_sumset(without, h, N, workers);
    record.in_hA = all.test(n_T);
    record.in_hA_minus_a = reduced.test(n_T);
    record.verified = record.in_hA && !record.in_hA_minus_a;
    return record;
}

WitnessRecord verify_witness(const PartitionSpec& spec, std::uint64_t a, std::uint32_t h,
                             std::uint64_t n_T, std::uint32_t T, const Caps& caps,
                             unsigned workers) {
    const auto part = classify_element(spec, a);
    if (!part)
        raise(Errc::not_a_basis_element, std::to_string(a) + " has support straddling parts");
    if (T > 61) raise(Errc::cap_exceeded, "T above 61");
    if (n_T > (std::uint64_t{1} << (T + 2))) raise(Errc::bad_param, "need n_T <= 2^(T+2)");

    const std::uint64_t N = std::max(n_T, (std::uint64_t{1} << (T + 1)) - 1);
    if (N > caps.window_cap) raise(Errc::cap_exceeded, "verification window above cap");

    // Every element of A up to N has support within [0, bit_width(N) - 1].
    const std::uint32_t t_eff = static_cast<std::uint32_t>(std::bit_width(N)) - 1;
    std::vector<std::uint64_t> elements;
    for (std::uint32_t j = 1; j <= spec.h; ++j) {
        auto partial = enumerate_part_elements(spec, j, t_eff, caps.subset_cap);
        for (std::uint64_t e : partial)
            if (e <= N) elements.push_back(e);
    }
    std::sort(elements.begin(), elements.end());

    WitnessRecord record = verify_witness_elements(elements, a, h, n_T, workers);
    record.part = *part;
    record.T = T;
    return record;
}

namespace {

// E_a restricted to [0, N] given the precomputed full sumset; returns the
// member count and the least member at or above the threshold.
struct EaSummary {
    std::uint64_t count = 0;
    std::optional<std::uint64_t> first_above;
};

EaSummary summarize_e_a(const WindowSet& all, const WindowSet& reduced, std::uint64_t threshold) {
    EaSummary s;
    for (std::uint64_t n = 0; n <= all.bound(); ++n) {
        if (all.test(n) && !reduced.test(n)) {
            ++s.count;
            if (!s.first_above && n >= threshold) s.first_above = n;
        }
    }
    return s;
}

}  // namespace

MinimalityReport removability_scan(const PartitionSpec& spec, std::uint32_t h, std::uint32_t T,
                                   std::uint64_t a_max, const ScanOptions& options) {
    require_valid(spec, options.caps);

    MinimalityReport report;
    report.spec_id = spec_key(spec);
    report.h = h;
    report.T = T;
    report.a_max = a_max;

    BasisWindow bw = build_basis_window(spec, T, options.caps);
    report.N = bw.window.bound();

    const WindowSet all = h_fold_sumset(bw.elements, h, report.N, options.workers);
    report.coverage = coverage_threshold(all);
    if (!report.coverage)
        raise(Errc::window_inconclusive,
              "h-fold sumset misses its own bound; enlarge T before scanning");
    const std::uint64_t threshold = *report.coverage;

    report.certificate.thm1 = thm1_condition(spec, options.thm1_t_max);
    report.certificate.thm2 = thm2_condition(spec);

    std::vector<std::uint64_t> targets;
    for (std::uint64_t a : bw.elements)
        if (a <= a_max) targets.push_back(a);
    report.elements.resize(targets.size());

    const auto process = [&](std::size_t idx) {
        const std::uint64_t a = targets[idx];
        ElementReport element;
        element.a = a;
        element.part = *classify_element(spec, a);

        std::vector<std::uint64_t> without;
        without.reserve(bw.elements.size() - 1);
        for (std::uint64_t e : bw.elements)
            if (e != a) without.push_back(e);
        const WindowSet reduced = h_fold_sumset(without, h, report.N, 1);
        const EaSummary summary = summarize_e_a(all, reduced, threshold);
        element.e_a_count = summary.count;
        element.e_a_above_threshold = summary.first_above;

        if (!summary.first_above) {
            element.verdict = Verdict::refuted_in_window;
        } else if (report.certificate.any()) {
            element.verdict = Verdict::theorem_proven;
        } else {
            element.verdict = Verdict::empirical_supported;
        }

        if (options.attach_witnesses && element.verdict != Verdict::refuted_in_window) {
            for (std::uint32_t t_w : {T >= 2 ? T - 2 : T, T}) {
                WitnessRecord record;
                bool have_value = false;
                for (WitnessMode mode : {WitnessMode::thm1, WitnessMode::thm2}) {
                    try {
                        const std::uint64_t n_t = witness(spec, a, t_w, mode);
                        if (!have_value) {
                            record = verify_witness(spec, a, h, n_t, t_w, options.caps, 1);
                            have_value = true;
                        }
                        record.modes.push_back(witness_mode_name(mode));
                    } catch (const Error&) {
                        // hypothesis route unavailable at this T; skip
                    }
                }
                if (have_value &&
                    (element.witnesses.empty() || element.witnesses.back().T != record.T))
                    element.witnesses.push_back(std::move(record));
            }
        }
        report.elements[idx] = std::move(element);
    };

    const unsigned workers =
        std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(targets.size())));
    if (workers == 1) {
        for (std::size_t idx = 0; idx < targets.size(); ++idx) process(idx);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t idx = next.fetch_add(1); idx < targets.size();
                     idx = next.fetch_add(1))
                    process(idx);
            });
        }
        for (auto& t : pool) t.join();
    }

    bool any_refuted = false;
    for (const auto& element : report.elements)
        any_refuted = any_refuted || element.verdict == Verdict::refuted_in_window;
    if (any_refuted)
        report.global = Verdict::refuted_in_window;
    else if (report.certificate.any())
        report.global = Verdict::theorem_proven;
    else
        report.global = Verdict::empirical_supported;
    return report;
}

}  // namespace minbasis
