#pragma once

#include <cstdint>

namespace minbasis {

// Resource caps. Defaults keep every analytic pass and window build at desk
// scale; the CLI can override the window cap via MINBASIS_WINDOW_CAP.
struct Caps {
    std::uint64_t window_cap = std::uint64_t{1} << 25;  // max window bound N
    std::uint32_t subset_cap = 24;                      // max bit positions per part enumeration
    std::uint64_t enumeration_cap = 10'000'000;         // max sweep assignment space
    std::uint32_t prefix_cap = 1u << 16;
    std::uint32_t period_cap = 1u << 16;
};

// Caps with the MINBASIS_WINDOW_CAP environment override applied, if set.
Caps caps_from_env();

}  // namespace minbasis
