#include "minbasis/window_io.hpp"

#include <array>
#include <cstring>
#include <fstream>

#include "minbasis/error.hpp"

namespace minbasis {

namespace {

constexpr std::array<char, 4> kMagic = {'M', 'B', 'W', 'S'};
constexpr std::uint32_t kVersion = 1;

void put_u32_le(std::ostream& os, std::uint32_t v) {
    for (int b = 0; b < 4; ++b) os.put(static_cast<char>((v >> (8 * b)) & 0xff));
}

void put_u64_le(std::ostream& os, std::uint64_t v) {
    for (int b = 0; b < 8; ++b) os.put(static_cast<char>((v >> (8 * b)) & 0xff));
}

std::uint32_t get_u32_le(std::istream& is) {
    std::uint32_t v = 0;
    for (int b = 0; b < 4; ++b) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(is.get())) << (8 * b);
    return v;
}

std::uint64_t get_u64_le(std::istream& is) {
    std::uint64_t v = 0;
    for (int b = 0; b < 8; ++b) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(is.get())) << (8 * b);
    return v;
}

}  // namespace

void write_window(const std::filesystem::path& path, const WindowSet& window) {
    std::ofstream os(path, std::ios::binary);
    if (!os) raise(Errc::io_error, "cannot open '" + path.string() + "' for writing");
    os.write(kMagic.data(), kMagic.size());
    put_u32_le(os, kVersion);
    put_u64_le(os, window.bound());
    for (std::size_t i = 0; i < window.word_count(); ++i) put_u64_le(os, window.words()[i]);
    if (!os) raise(Errc::io_error, "write failed for '" + path.string() + "'");
}

WindowSet read_window(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) raise(Errc::io_error, "cannot open '" + path.string() + "' for reading");
    std::array<char, 4> magic{};
    is.read(magic.data(), magic.size());
    if (!is || magic != kMagic) raise(Errc::io_error, "bad magic in '" + path.string() + "'");
    const std::uint32_t version = get_u32_le(is);
    if (version != kVersion)
        raise(Errc::io_error, "unsupported window version " + std::to_string(version));
    const std::uint64_t bound = get_u64_le(is);
    WindowSet window(bound);
    for (std::size_t i = 0; i < window.word_count(); ++i) window.words()[i] = get_u64_le(is);
    if (!is) raise(Errc::io_error, "truncated window file '" + path.string() + "'");
    is.peek();
    if (!is.eof()) raise(Errc::io_error, "trailing bytes in window file '" + path.string() + "'");
    return window;
}

}  // namespace minbasis
