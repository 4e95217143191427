#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locdel/bits.hpp"
#include "locdel/error.hpp"

namespace locdel {

// Polynomial-basis element of GF(2^ell). Bit (ell-1) is the coefficient of
// x^(ell-1); value 0 is the additive identity.
using Symbol = std::uint32_t;

inline constexpr unsigned kMinExponent = 2;
inline constexpr unsigned kMaxExponent = 24;

// Lowest-weight primitive polynomial per degree, bit i = coefficient of x^i.
// Degree 4 is x^4+x+1 and degree 5 is x^5+x^2+1.
inline constexpr std::array<std::uint32_t, kMaxExponent + 1> kDefaultPrimitivePolys = {
    0x0,       0x0,       0x7,       0xB,      0x13,     0x25,      0x43,
    0x83,      0x11D,     0x211,     0x409,    0x805,    0x1053,    0x201B,
    0x4443,    0x8003,    0x1100B,   0x20009,  0x40081,  0x80027,   0x100009,
    0x200005,  0x400003,  0x800021,  0x1000087,
};

/// Table-driven GF(2^ell) arithmetic. Immutable once constructed.
class Field {
public:
    explicit Field(unsigned ell, std::optional<std::uint32_t> primitive_poly = std::nullopt)
        : ell_(ell)
    {
        if (ell < kMinExponent || ell > kMaxExponent)
            throw unsupported_exponent("field exponent " + std::to_string(ell) + " outside [2, 24]");
        poly_ = primitive_poly.value_or(kDefaultPrimitivePolys[ell]);
        if ((poly_ >> ell) != 1u)
            throw non_primitive_polynomial("polynomial degree differs from " + std::to_string(ell));

        const std::uint32_t order = this->order();
        exp_.resize(order);
        log_.assign(std::size_t{1} << ell, kNoLog);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < order; ++i) {
            if (log_[x] != kNoLog)
                throw non_primitive_polynomial("x has multiplicative order " + std::to_string(i) +
                                               " < " + std::to_string(order));
            exp_[i] = x;
            log_[x] = i;
            x <<= 1;
            if (x >> ell)
                x ^= poly_;
        }
        if (x != 1)
            throw non_primitive_polynomial("x^(2^ell - 1) != 1");
    }

    unsigned ell() const noexcept { return ell_; }
    std::uint32_t primitive_poly() const noexcept { return poly_; }
    std::uint32_t size() const noexcept { return std::uint32_t{1} << ell_; }
    std::uint32_t order() const noexcept { return size() - 1; }

    static Symbol add(Symbol a, Symbol b) noexcept { return a ^ b; }
    static Symbol sub(Symbol a, Symbol b) noexcept { return a ^ b; }

    Symbol mul(Symbol a, Symbol b) const noexcept
    {
        if (a == 0 || b == 0)
            return 0;
        std::uint32_t e = log_[a] + log_[b];
        if (e >= order())
            e -= order();
        return exp_[e];
    }

    Symbol inv(Symbol a) const
    {
        if (a == 0)
            throw division_by_zero("inverse of zero");
        return log_[a] == 0 ? 1 : exp_[order() - log_[a]];
    }

    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

    /// alpha^e for any integer e (reduced modulo the group order).
    Symbol alpha_pow(long long e) const noexcept
    {
        long long r = e % static_cast<long long>(order());
        if (r < 0)
            r += order();
        return exp_[static_cast<std::size_t>(r)];
    }

    /// Discrete log to base alpha; a must be nonzero.
    std::uint32_t log(Symbol a) const
    {
        if (a == 0)
            throw division_by_zero("log of zero");
        return log_[a];
    }

    bool contains(Symbol a) const noexcept { return a < size(); }

private:
    static constexpr std::uint32_t kNoLog = ~std::uint32_t{0};

    unsigned ell_;
    std::uint32_t poly_ = 0;
    std::vector<Symbol> exp_;
    std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(unsigned ell, std::optional<std::uint32_t> poly = std::nullopt)
{
    return std::make_shared<const Field>(ell, poly);
}

/// Reads up to ell bits MSB-first; a short read fills the low coefficients with zeros.
inline Symbol read_symbol(BitView bits, unsigned ell) noexcept
{
    Symbol v = 0;
    for (unsigned i = 0; i < ell; ++i)
        v = (v << 1) | (i < bits.size() ? (bits[i] & 1u) : 0u);
    return v;
}

inline void write_symbol(Symbol v, unsigned ell, std::vector<std::uint8_t>& out, std::size_t nbits)
{
    for (std::size_t i = 0; i < nbits; ++i)
        out.push_back(static_cast<std::uint8_t>((v >> (ell - 1 - i)) & 1u));
}

/// Chunks bits into ell-bit symbols, first bit of each block = highest degree.
inline std::vector<Symbol> bits_to_symbols(BitView bits, const Field& field)
{
    const unsigned ell = field.ell();
    std::vector<Symbol> out;
    out.reserve((bits.size() + ell - 1) / ell);
    for (std::size_t pos = 0; pos < bits.size(); pos += ell)
        out.push_back(read_symbol(bits.subspan(pos, std::min<std::size_t>(ell, bits.size() - pos)), ell));
    return out;
}

/// Inverse of bits_to_symbols. With nbits set, the output is truncated to that
/// many bits (dropping the virtual padding of a short final block).
inline Bits symbols_to_bits(std::span<const Symbol> symbols, const Field& field,
                            std::optional<std::size_t> nbits = std::nullopt)
{
    const unsigned ell = field.ell();
    const std::size_t total = nbits.value_or(symbols.size() * ell);
    if (total > symbols.size() * ell)
        throw length_mismatch("requested more bits than the symbols carry");
    Bits out;
    out.reserve(total);
    for (std::size_t i = 0; i < symbols.size() && out.size() < total; ++i)
        write_symbol(symbols[i], ell, out, std::min<std::size_t>(ell, total - out.size()));
    return out;
}

} // namespace locdel
