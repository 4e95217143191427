#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locdel/bits.hpp"
#include "locdel/error.hpp"
#include "locdel/gc_multi.hpp"
#include "locdel/params.hpp"
#include "locdel/rng.hpp"

namespace locdel {

/// Deletions inside one window: bit positions start + offset (start is 1-based).
struct Window {
    std::size_t start = 1;
    std::vector<std::size_t> offsets;  // sorted, distinct

    friend bool operator==(const Window&, const Window&) = default;
};

struct DeletionPattern {
    std::vector<Window> windows;  // sorted by start

    std::size_t total() const noexcept
    {
        std::size_t n = 0;
        for (const auto& win : windows)
            n += win.offsets.size();
        return n;
    }

    friend bool operator==(const DeletionPattern&, const DeletionPattern&) = default;
};

/// Optional channel limits a pattern is checked against.
struct WindowLimits {
    std::optional<std::size_t> w;
    std::optional<std::size_t> z;
};

inline void validate_pattern(const DeletionPattern& pat, std::size_t length, WindowLimits limits = {})
{
    if (limits.z && pat.windows.size() > *limits.z)
        throw invalid_pattern(std::to_string(pat.windows.size()) + " windows exceed z = " + std::to_string(*limits.z));
    std::size_t last_pos = 0;   // last deleted position so far (1-based, 0 = none)
    std::size_t next_start = 1; // earliest start allowed with window limits
    for (const auto& win : pat.windows) {
        if (win.start < 1)
            throw invalid_pattern("window start is 1-based");
        if (limits.w && win.start < next_start)
            throw invalid_pattern("windows overlap or are unsorted");
        for (std::size_t i = 0; i < win.offsets.size(); ++i) {
            const std::size_t off = win.offsets[i];
            if (i > 0 && off <= win.offsets[i - 1])
                throw invalid_pattern("window offsets must be strictly increasing");
            if (limits.w && off >= *limits.w)
                throw invalid_pattern("offset " + std::to_string(off) + " outside window of size " +
                                      std::to_string(*limits.w));
            const std::size_t pos = win.start + off;
            if (pos > length)
                throw invalid_pattern("deletion position " + std::to_string(pos) + " beyond string of length " +
                                      std::to_string(length));
            if (pos <= last_pos)
                throw invalid_pattern("deletion positions must be distinct and ordered");
            last_pos = pos;
        }
        if (limits.w)
            next_start = win.start + *limits.w;
    }
}

/// x with the pattern's positions removed, order preserved.
inline Bits delete_localized(BitView x, const DeletionPattern& pat, WindowLimits limits = {})
{
    validate_pattern(pat, x.size(), limits);
    std::vector<bool> drop(x.size(), false);
    for (const auto& win : pat.windows)
        for (auto off : win.offsets)
            drop[win.start + off - 1] = true;
    Bits y;
    y.reserve(x.size() - pat.total());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!drop[i])
            y.push_back(x[i]);
    return y;
}

/// Text form "start:off,off;start:off"; the empty string is the empty pattern.
inline std::string format_pattern(const DeletionPattern& pat)
{
    std::string out;
    for (std::size_t i = 0; i < pat.windows.size(); ++i) {
        if (i)
            out += ';';
        out += std::to_string(pat.windows[i].start) + ':';
        for (std::size_t j = 0; j < pat.windows[i].offsets.size(); ++j) {
            if (j)
                out += ',';
            out += std::to_string(pat.windows[i].offsets[j]);
        }
    }
    return out;
}

namespace detail {

inline std::size_t parse_index(std::string_view text)
{
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end)
        throw invalid_pattern("bad number '" + std::string(text) + "' in pattern");
    return value;
}

} // namespace detail

inline DeletionPattern parse_pattern(std::string_view text)
{
    DeletionPattern pat;
    while (!text.empty()) {
        const auto semi = text.find(';');
        const std::string_view item = text.substr(0, semi);
        text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);

        const auto colon = item.find(':');
        if (colon == std::string_view::npos)
            throw invalid_pattern("window '" + std::string(item) + "' lacks ':'");
        Window win;
        win.start = detail::parse_index(item.substr(0, colon));
        std::string_view offs = item.substr(colon + 1);
        while (!offs.empty()) {
            const auto comma = offs.find(',');
            win.offsets.push_back(detail::parse_index(offs.substr(0, comma)));
            offs = comma == std::string_view::npos ? std::string_view{} : offs.substr(comma + 1);
        }
        pat.windows.push_back(std::move(win));
    }
    return pat;
}

enum class SamplingMode { whole_codeword, systematic_only };

/// Where random windows may be placed.
struct PatternSpace {
    std::size_t n = 0;  // codeword length
    std::size_t k = 0;  // systematic prefix length
    std::size_t w = 1;
    std::size_t z = 1;
    SamplingMode mode = SamplingMode::whole_codeword;
};

inline PatternSpace pattern_space(const CodeParams& p, SamplingMode mode = SamplingMode::whole_codeword)
{
    return {p.codeword_length(), p.k, p.w, 1, mode};
}

inline PatternSpace pattern_space(const MultiParams& p, SamplingMode mode = SamplingMode::whole_codeword)
{
    return {p.codeword_length(), p.base.k, p.base.w, p.z, mode};
}

namespace detail {

// Floyd's algorithm: uniform count-subset of [0, universe), sorted.
inline std::vector<std::size_t> sample_subset(std::size_t universe, std::size_t count, Rng& rng)
{
    std::set<std::size_t> chosen;
    for (std::size_t j = universe - count; j < universe; ++j) {
        const auto t = static_cast<std::size_t>(rng.below(j + 1));
        if (!chosen.insert(t).second)
            chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

} // namespace detail

/// z disjoint windows placed uniformly among all disjoint placements, each
/// with deltas[j] offsets drawn without replacement. A single delta applies
/// to every window.
inline DeletionPattern sample_pattern(const PatternSpace& space, std::span<const std::size_t> deltas, Rng& rng)
{
    if (deltas.size() != 1 && deltas.size() != space.z)
        throw invalid_config("need one deletion count or one per window");
    for (auto d : deltas)
        if (d > space.w)
            throw invalid_config("deletions per window exceed w");
    const std::size_t length = space.mode == SamplingMode::whole_codeword ? space.n : space.k;
    if (space.z * space.w > length)
        throw invalid_config("windows do not fit in the sampling region");

    // Disjoint starts s_j map one-to-one onto distinct t_j = s_j - j (w - 1).
    const std::size_t slots = length - space.z * space.w + space.z;
    const auto picks = detail::sample_subset(slots, space.z, rng);
    DeletionPattern pat;
    for (std::size_t j = 0; j < space.z; ++j) {
        Window win;
        win.start = picks[j] + j * (space.w - 1) + 1;
        win.offsets = detail::sample_subset(space.w, deltas.size() == 1 ? deltas[0] : deltas[j], rng);
        pat.windows.push_back(std::move(win));
    }
    return pat;
}

inline DeletionPattern sample_pattern(const PatternSpace& space, std::span<const std::size_t> deltas,
                                      std::uint64_t seed)
{
    Rng rng(seed);
    return sample_pattern(space, deltas, rng);
}

} // namespace locdel
