#include "minbasis/sumset.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "minbasis/radix.hpp"

namespace minbasis {

void WindowSet::mask_tail() {
    const unsigned used = static_cast<unsigned>(bound_ % 64) + 1;
    if (used < 64) words_.back() &= (std::uint64_t{1} << used) - 1;
}

std::uint64_t WindowSet::popcount() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

BasisWindow build_basis_window(const PartitionSpec& spec, std::uint32_t T, const Caps& caps) {
    require_valid(spec, caps);
    if (T > 62) raise(Errc::cap_exceeded, "T above 62");
    const std::uint64_t N = (std::uint64_t{1} << (T + 1)) - 1;
    if (N > caps.window_cap)
        raise(Errc::cap_exceeded, "window bound " + std::to_string(N) + " above cap " +
                                      std::to_string(caps.window_cap));

    BasisWindow out;
    for (std::uint32_t j = 1; j <= spec.h; ++j) {
        auto part = enumerate_part_elements(spec, j, T, caps.subset_cap);
        out.elements.insert(out.elements.end(), part.begin(), part.end());
    }
    std::sort(out.elements.begin(), out.elements.end());

    out.window = WindowSet(N);
    for (std::uint64_t a : out.elements) out.window.set(a);
    return out;
}

namespace {

// dest |= src << shift, truncated to the window.
void shift_or_into(WindowSet& dest, const WindowSet& src, std::uint64_t shift) {
    const std::size_t words = dest.word_count();
    const std::size_t word_offset = static_cast<std::size_t>(shift / 64);
    const unsigned bit_offset = static_cast<unsigned>(shift % 64);
    const std::uint64_t* in = src.words();
    std::uint64_t* out = dest.words();
    if (bit_offset == 0) {
        for (std::size_t i = words; i-- > word_offset;) out[i] |= in[i - word_offset];
    } else {
        for (std::size_t i = words; i-- > word_offset;) {
            std::uint64_t value = in[i - word_offset] << bit_offset;
            if (i > word_offset) value |= in[i - word_offset - 1] >> (64 - bit_offset);
            out[i] |= value;
        }
    }
}

WindowSet shifted_or_pass(const WindowSet& src, std::span<const std::uint64_t> elements,
                          std::uint64_t N, unsigned workers) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(elements.size())));
    if (workers == 1) {
        WindowSet dest(N);
        for (std::uint64_t a : elements) shift_or_into(dest, src, a);
        dest.mask_tail();
        return dest;
    }

    std::vector<WindowSet> partials(workers, WindowSet(N));
    std::vector<std::thread> pool;
    const std::size_t chunk = (elements.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::size_t begin = std::min(elements.size(), w * chunk);
            const std::size_t end = std::min(elements.size(), begin + chunk);
            for (std::size_t k = begin; k < end; ++k) shift_or_into(partials[w], src, elements[k]);
        });
    }
    for (auto& t : pool) t.join();

    WindowSet dest = std::move(partials[0]);
    for (unsigned w = 1; w < workers; ++w)
        for (std::size_t i = 0; i < dest.word_count(); ++i)
            dest.words()[i] |= partials[w].words()[i];
    dest.mask_tail();
    return dest;
}

}  // namespace

WindowSet h_fold_sumset(std::span<const std::uint64_t> elements, std::uint32_t h, std::uint64_t N,
                        unsigned workers) {
    if (h < 1) raise(Errc::bad_param, "h must be at least 1");
    WindowSet current(N);
    for (std::uint64_t a : elements) {
        if (a < 1 || a > N) raise(Errc::bad_param, "elements must lie in [1, N]");
        current.set(a);
    }
    for (std::uint32_t fold = 1; fold < h; ++fold)
        current = shifted_or_pass(current, elements, N, workers);
    return current;
}

std::vector<std::uint64_t> gaps(const WindowSet& window, std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi || hi > window.bound()) raise(Errc::bad_param, "need 0 <= lo <= hi <= N");
    std::vector<std::uint64_t> missing;
    for (std::uint64_t n = lo; n <= hi; ++n)
        if (!window.test(n)) missing.push_back(n);
    return missing;
}

std::optional<std::uint64_t> coverage_threshold(const WindowSet& window) {
    if (!window.test(window.bound())) return std::nullopt;
    std::uint64_t n = window.bound();
    while (n > 0 && window.test(n - 1)) --n;
    return n;
}

}  // namespace minbasis
