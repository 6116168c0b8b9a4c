#pragma once

#include <charconv>
#include <string>

namespace versenet {

// Shortest round-trip decimal form, locale-independent; keeps every output
// file byte-stable across runs.
inline std::string fmt_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace versenet
