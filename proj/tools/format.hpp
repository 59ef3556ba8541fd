#pragma once

// Locale-independent number formatting for all CLI output. Shortest
// round-trip text keeps reports and meshes reproducible byte-for-byte.

#include <charconv>
#include <string>
#include <system_error>

namespace sol3cli {

// Shortest decimal representation that round-trips to the same double.
inline std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Fixed 17 significant digits (CSV columns).
inline std::string fmt17(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

}  // namespace sol3cli
