#pragma once
// Locale-independent number rendering, shortest form that parses back to the
// exact same double. Output files built from this are byte-reproducible.

#include <charconv>
#include <string>

namespace ecosim {

inline std::string format_double(double value) {
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    (void)ec; // 64 chars always suffice for shortest round-trip form
    return std::string(buffer, end);
}

} // namespace ecosim
