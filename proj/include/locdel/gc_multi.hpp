#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "locdel/bits.hpp"
#include "locdel/error.hpp"
#include "locdel/gc_single.hpp"
#include "locdel/guess_check.hpp"
#include "locdel/params.hpp"

namespace locdel {

inline constexpr std::size_t kDefaultMaxWindows = 3;

/// Multi-window layout: u followed by the parity bits, each repeated
/// z*w + 1 times. There is no buffer.
struct MultiParams {
    CodeParams base;
    std::size_t z = 1;
    std::size_t repetition = 0;

    std::size_t parity_region_bits() const noexcept { return base.parity_bits() * repetition; }
    std::size_t codeword_length() const noexcept { return base.k + parity_region_bits(); }
    std::size_t max_deletions() const noexcept { return z * base.w; }
};

/// Case enumeration is Theta(m^z); raise max_windows deliberately for z > 3.
inline MultiParams multi_params(std::size_t k, std::size_t w, std::size_t c, std::size_t z,
                                GeneratorKind kind = GeneratorKind::cauchy,
                                std::size_t max_windows = kDefaultMaxWindows)
{
    if (z < 1)
        throw invalid_config("need at least one window");
    if (z > max_windows)
        throw invalid_config("z = " + std::to_string(z) + " exceeds the configured cap of " +
                             std::to_string(max_windows));
    if (c < 2 * z + 1)
        throw invalid_config("multi-window decoding needs c >= 2z + 1 parities");
    MultiParams p;
    p.base = gc_params(k, w, c, kind);
    p.z = z;
    p.repetition = z * w + 1;
    return p;
}

inline Bits repetition_encode(BitView bits, std::size_t r)
{
    if (r == 0)
        throw invalid_config("repetition factor must be positive");
    Bits out;
    out.reserve(bits.size() * r);
    for (auto b : bits)
        out.insert(out.end(), r, b);
    return out;
}

/// Recovers m_bits bits from a repetition-coded string that lost d <= r - 1
/// bits anywhere. Deletions only shift bits left, and by fewer than r places,
/// so received position i*r still lies inside the i-th run.
inline Bits repetition_decode(BitView suffix, std::size_t m_bits, std::size_t r, std::size_t d)
{
    if (r == 0 || d >= r)
        throw length_mismatch("repetition decoding needs d <= r - 1");
    if (suffix.size() + d != m_bits * r)
        throw length_mismatch("repetition suffix has " + std::to_string(suffix.size()) + " bits, expected " +
                              std::to_string(m_bits * r - d));
    Bits out(m_bits);
    for (std::size_t i = 0; i < m_bits; ++i)
        out[i] = suffix[i * r];
    return out;
}

inline Codeword encode_multi(BitView u, const MultiParams& p)
{
    if (u.size() != p.base.k)
        throw length_mismatch("message has " + std::to_string(u.size()) + " bits, expected " +
                              std::to_string(p.base.k));
    Codeword cw;
    cw.bits.reserve(p.codeword_length());
    cw.bits.assign(u.begin(), u.end());
    const Bits rep = repetition_encode(parity_bits_for(u, p.base), p.repetition);
    cw.bits.insert(cw.bits.end(), rep.begin(), rep.end());
    cw.systematic = {0, p.base.k};
    cw.buffer = {p.base.k, 0};
    cw.parity = {p.base.k, rep.size()};
    return cw;
}

/// One window hypothesis: blocks first_block and first_block + 1 lost `deletions` bits.
struct WindowGuess {
    std::size_t first_block = 0;
    std::size_t deletions = 0;

    friend auto operator<=>(const WindowGuess&, const WindowGuess&) = default;
};

using WindowCase = std::vector<WindowGuess>;

// disjoint: windows occupy distinct, non-overlapping block pairs.
// shared:   consecutive windows may reuse blocks; overlapping pairs merge.
enum class BlockSharing { disjoint, shared };

namespace detail {

inline void enumerate_windows(const MultiParams& p, std::size_t remaining, std::size_t min_block, BlockSharing sharing,
                              WindowCase& current, std::vector<WindowCase>& out)
{
    const std::size_t j = current.size();
    if (j == p.z) {
        if (remaining == 0)
            out.push_back(current);
        return;
    }
    const std::size_t windows_left = p.z - j - 1;
    if (remaining > (windows_left + 1) * p.base.w)
        return;
    for (std::size_t block = min_block; block + 1 < p.base.m; ++block) {
        const std::size_t next_min = sharing == BlockSharing::disjoint ? block + 2 : block;
        for (std::size_t d = 0; d <= std::min(p.base.w, remaining); ++d) {
            current.push_back({block, d});
            enumerate_windows(p, remaining - d, next_min, sharing, current, out);
            current.pop_back();
        }
    }
}

} // namespace detail

/// All window placements crossed with all splits of `total` deletions into z
/// per-window counts in [0, w]. Placements are listed in ascending order.
inline std::vector<WindowCase> enumerate_cases(const MultiParams& p, std::size_t total,
                                               BlockSharing sharing = BlockSharing::disjoint)
{
    std::vector<WindowCase> out;
    if (total > p.max_deletions())
        return out;
    WindowCase current;
    current.reserve(p.z);
    detail::enumerate_windows(p, total, 0, sharing, current, out);
    return out;
}

/// Collapses a window case into maximal erased runs; overlapping pairs merge
/// and their deletion counts add up.
inline std::vector<ErasedRun> to_runs(const WindowCase& windows)
{
    std::vector<ErasedRun> runs;
    for (const auto& win : windows) {
        if (!runs.empty() && win.first_block < runs.back().first_block + runs.back().block_count) {
            auto& last = runs.back();
            last.block_count = std::max(last.first_block + last.block_count, win.first_block + 2) - last.first_block;
            last.deletions += win.deletions;
        } else {
            runs.push_back({win.first_block, 2, win.deletions});
        }
    }
    return runs;
}

/// Distinct erased-run hypotheses the multi-window decoder checks for a given
/// total deletion count, in lexicographic order.
inline std::vector<std::vector<ErasedRun>> decoder_cases(const MultiParams& p, std::size_t total)
{
    std::set<std::vector<ErasedRun>> unique;
    for (const auto& wc : enumerate_cases(p, total, BlockSharing::shared)) {
        auto runs = to_runs(wc);
        bool fits = true;
        for (const auto& run : runs) {
            std::size_t bits = 0;
            for (std::size_t b = run.first_block; b < run.first_block + run.block_count; ++b)
                bits += p.base.block_len(b);
            fits = fits && run.deletions <= bits;
        }
        if (fits)
            unique.insert(std::move(runs));
    }
    return {unique.begin(), unique.end()};
}

/// Success::guess, when set, is the index into decoder_cases(p, total) of the
/// first possible case.
inline DecodeOutcome decode_multi(BitView y, const MultiParams& p)
{
    const std::size_t n = p.codeword_length();
    if (y.size() > n)
        return InvalidInput{"received " + std::to_string(y.size()) + " bits, codeword has " + std::to_string(n)};
    const std::size_t total = n - y.size();
    if (total > p.max_deletions())
        return InvalidInput{std::to_string(total) + " deletions exceed z*w = " + std::to_string(p.max_deletions())};
    if (total == 0)
        return Success{Bits(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(p.base.k)), std::nullopt};

    const CodeParams& base = p.base;
    const Bits parity_bits =
        repetition_decode(y.last(p.parity_region_bits() - total), base.parity_bits(), p.repetition, total);
    const auto parities = bits_to_symbols(parity_bits, *base.field);
    const BitView s = y.first(base.k - total);

    CaseEvaluator eval(base, s, parities, total);
    CandidateSet found;
    const auto cases = decoder_cases(p, total);
    for (std::size_t i = 0; i < cases.size(); ++i)
        if (auto candidate = eval.candidate(cases[i]))
            found.add(std::move(*candidate), i);

    if (found.distinct.empty())
        return InvalidInput{"no case is consistent with the received string"};
    if (found.distinct.size() == 1)
        return Success{std::move(found.distinct.front()), found.first_index};
    return Failure{std::move(found.distinct)};
}

} // namespace locdel
