#include "parrondo/common.hpp"

#include <charconv>
#include <system_error>

namespace parrondo {

std::string_view variant_name(GameVariant v) {
    switch (v) {
        case GameVariant::winning: return "winning";
        case GameVariant::fair: return "fair";
        case GameVariant::losing: return "losing";
    }
    return "unknown";
}

GameVariant variant_from_name(std::string_view name) {
    if (name == "winning") return GameVariant::winning;
    if (name == "fair") return GameVariant::fair;
    if (name == "losing") return GameVariant::losing;
    throw ConfigError("unknown game classification: " + std::string(name));
}

namespace {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::string_view label) {
    return splitmix64(base ^ fnv1a64(label));
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

double parse_double(std::string_view text, std::string_view field) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError(std::string(field) + ": not a number: '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace parrondo
