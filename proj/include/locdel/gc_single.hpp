#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "locdel/bits.hpp"
#include "locdel/error.hpp"
#include "locdel/gf2e.hpp"
#include "locdel/guess_check.hpp"
#include "locdel/mds.hpp"
#include "locdel/params.hpp"

namespace locdel {

struct BitSpan {
    std::size_t offset = 0;
    std::size_t length = 0;
};

struct Codeword {
    Bits bits;
    BitSpan systematic;
    BitSpan buffer;  // empty for the multi-window layout
    BitSpan parity;
};

struct Success {
    Bits message;
    // Lowest winning guess (0-based first block of the erased pair); empty when
    // the systematic bits were read directly.
    std::optional<std::size_t> guess;
};

struct Failure {
    std::vector<Bits> candidates;  // at least two distinct messages
};

struct InvalidInput {
    std::string reason;
};

using DecodeOutcome = std::variant<Success, Failure, InvalidInput>;

inline bool is_success(const DecodeOutcome& o) noexcept { return std::holds_alternative<Success>(o); }
inline bool is_failure(const DecodeOutcome& o) noexcept { return std::holds_alternative<Failure>(o); }

/// Parity symbols of u serialised MSB-first, ell bits each.
inline Bits parity_bits_for(BitView u, const CodeParams& p)
{
    const auto symbols = bits_to_symbols(u, *p.field);
    const auto parities = encode_parities(symbols, *p.generator);
    return symbols_to_bits(parities, *p.field);
}

/// u || 0^w 1 || parities.
inline Codeword encode(BitView u, const CodeParams& p)
{
    if (u.size() != p.k)
        throw length_mismatch("message has " + std::to_string(u.size()) + " bits, expected " + std::to_string(p.k));
    Codeword cw;
    cw.bits.reserve(p.codeword_length());
    cw.bits.assign(u.begin(), u.end());
    cw.bits.insert(cw.bits.end(), p.w, 0);
    cw.bits.push_back(1);
    const Bits parity = parity_bits_for(u, p);
    cw.bits.insert(cw.bits.end(), parity.begin(), parity.end());
    cw.systematic = {0, p.k};
    cw.buffer = {p.k, p.w + 1};
    cw.parity = {p.k + p.w + 1, parity.size()};
    return cw;
}

enum class Region { systematic_affected, parity_or_buffer_only };

struct Detection {
    Region region;
    std::size_t deletions;
};

/// Looks at received bit lambda = k + w - delta (0-based). It is the buffer's
/// one exactly when every deletion sits left of it.
inline Detection detect_affected_region(BitView y, const CodeParams& p)
{
    const std::size_t n = p.codeword_length();
    if (y.size() > n)
        throw too_long("received " + std::to_string(y.size()) + " bits, codeword has " + std::to_string(n));
    if (y.size() + p.w < n)
        throw too_many_deletions(std::to_string(n - y.size()) + " deletions exceed window " + std::to_string(p.w));
    const std::size_t delta = n - y.size();
    if (delta == 0)
        return {Region::parity_or_buffer_only, 0};
    const std::size_t lambda = p.k + p.w - delta;
    return {y[lambda] ? Region::systematic_affected : Region::parity_or_buffer_only, delta};
}

inline ErasedRun guess_run(std::size_t guess, std::size_t deletions) { return ErasedRun{guess, 2, deletions}; }

/// Full verdict for the hypothesis that blocks guess and guess+1 absorbed all
/// deletions. s holds the k - delta damaged systematic bits.
inline CaseVerdict evaluate_guess(BitView s, std::size_t guess, std::span<const Symbol> parities, const CodeParams& p)
{
    if (guess + 1 >= p.m)
        throw invalid_config("guess index out of range");
    if (s.size() > p.k || p.k - s.size() > p.w)
        throw length_mismatch("damaged systematic part has the wrong length");
    CaseEvaluator eval(p, s, parities, p.k - s.size());
    const ErasedRun run = guess_run(guess, p.k - s.size());
    return eval.evaluate(std::span(&run, 1));
}

inline std::optional<Bits> try_guess(BitView s, std::size_t guess, std::span<const Symbol> parities,
                                     const CodeParams& p)
{
    auto verdict = evaluate_guess(s, guess, parities, p);
    if (!verdict.possible())
        return std::nullopt;
    return symbols_to_bits(verdict.symbols, *p.field, p.k);
}

inline DecodeOutcome decode(BitView y, const CodeParams& p)
{
    Detection det{};
    try {
        det = detect_affected_region(y, p);
    } catch (const error& e) {
        return InvalidInput{e.what()};
    }
    if (det.region == Region::parity_or_buffer_only)
        return Success{Bits(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(p.k)), std::nullopt};

    const BitView s = y.first(p.k - det.deletions);
    const auto parities = bits_to_symbols(y.last(p.parity_bits()), *p.field);
    CaseEvaluator eval(p, s, parities, det.deletions);
    CandidateSet found;
    for (std::size_t i = 0; i + 1 < p.m; ++i) {
        const ErasedRun run = guess_run(i, det.deletions);
        if (auto candidate = eval.candidate(std::span(&run, 1)))
            found.add(std::move(*candidate), i);
    }
    if (found.distinct.empty())
        return InvalidInput{"no guess is consistent with the received string"};
    if (found.distinct.size() == 1)
        return Success{std::move(found.distinct.front()), found.first_index};
    return Failure{std::move(found.distinct)};
}

} // namespace locdel
