#pragma once

#include <filesystem>

#include "minbasis/sumset.hpp"

namespace minbasis {

// Window dump format, for caching between CLI invocations:
//   bytes 0..3   magic "MBWS"
//   bytes 4..7   version (uint32, little endian, currently 1)
//   bytes 8..15  N (uint64, little endian)
//   then ceil((N+1)/64) uint64 words, little endian; bit n of the set is
//   bit (n % 64) of word (n / 64).
void write_window(const std::filesystem::path& path, const WindowSet& window);
WindowSet read_window(const std::filesystem::path& path);

}  // namespace minbasis
