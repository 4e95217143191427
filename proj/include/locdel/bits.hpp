#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locdel/error.hpp"

namespace locdel {

// One bit per byte, values 0 or 1. Index 0 is the first transmitted bit.
using Bits = std::vector<std::uint8_t>;
using BitView = std::span<const std::uint8_t>;

// Parses '0'/'1' characters; blanks and underscores are skipped so that
// grouped literals such as "1100 1010" can be written directly.
inline Bits bits_from_string(std::string_view text)
{
    Bits out;
    out.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
        case '0': out.push_back(0); break;
        case '1': out.push_back(1); break;
        case ' ':
        case '_':
        case '\t': break;
        default:
            throw invalid_config(std::string("not a bit character: '") + ch + "'");
        }
    }
    return out;
}

inline std::string to_string(BitView bits)
{
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits)
        out.push_back(b ? '1' : '0');
    return out;
}

inline Bits concat(std::initializer_list<BitView> parts)
{
    Bits out;
    for (auto part : parts)
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

} // namespace locdel
