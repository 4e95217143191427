#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <memory>
#include <string>

#include "locdel/error.hpp"
#include "locdel/gf2e.hpp"
#include "locdel/mds.hpp"

namespace locdel {

inline std::size_t ceil_log2(std::size_t x) noexcept
{
    return x <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(x - 1));
}

/// Shared configuration of a Guess & Check code. The message of k bits is cut
/// into m blocks of ell bits (the last one possibly shorter) and protected by
/// c MDS parity symbols over GF(2^ell).
struct CodeParams {
    std::size_t k = 0;
    std::size_t w = 0;
    std::size_t c = 0;
    std::size_t ell = 0;
    std::size_t m = 0;
    std::size_t last_block_len = 0;
    GeneratorKind kind = GeneratorKind::cauchy;
    FieldPtr field;
    GeneratorPtr generator;

    std::size_t block_start(std::size_t b) const noexcept { return b * ell; }
    std::size_t block_len(std::size_t b) const noexcept { return b + 1 == m ? last_block_len : ell; }
    std::size_t parity_bits() const noexcept { return c * ell; }

    /// Length of the single-window codeword: message, buffer of w zeros and a one, parities.
    std::size_t codeword_length() const noexcept { return k + w + 1 + parity_bits(); }
};

/// Builds and validates a configuration. The chunking length is
/// max(w, ceil(log2 k)) so that a window never spans more than two blocks.
inline CodeParams gc_params(std::size_t k, std::size_t w, std::size_t c, GeneratorKind kind = GeneratorKind::cauchy)
{
    if (k < 4)
        throw invalid_config("message length must be at least 4 bits");
    if (w < 1 || w >= k)
        throw invalid_config("window size must satisfy 1 <= w < k");
    if (c < 3)
        throw invalid_config("at least 3 parity symbols are required");

    CodeParams p;
    p.k = k;
    p.w = w;
    p.c = c;
    p.kind = kind;
    p.ell = std::max(w, ceil_log2(k));
    if (p.ell > kMaxExponent)
        throw invalid_config("chunking length " + std::to_string(p.ell) + " exceeds the supported field size");
    p.m = (k + p.ell - 1) / p.ell;
    p.last_block_len = k - (p.m - 1) * p.ell;
    if (p.m < 2)
        throw invalid_config("message must span at least two blocks");
    if (p.m + c > (std::size_t{1} << p.ell))
        throw invalid_config("m + c = " + std::to_string(p.m + c) + " exceeds field size 2^" + std::to_string(p.ell));

    p.field = make_field(static_cast<unsigned>(p.ell));
    p.generator = std::make_shared<const Generator>(Generator::make(kind, p.m, c, p.field));
    return p;
}

} // namespace locdel
