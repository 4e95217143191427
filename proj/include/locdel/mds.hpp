#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locdel/error.hpp"
#include "locdel/gf2e.hpp"

namespace locdel {

enum class GeneratorKind { cauchy, vandermonde };

inline std::string_view to_string(GeneratorKind kind)
{
    return kind == GeneratorKind::cauchy ? "cauchy" : "vandermonde";
}

inline GeneratorKind parse_generator_kind(std::string_view text)
{
    if (text == "cauchy")
        return GeneratorKind::cauchy;
    if (text == "vandermonde")
        return GeneratorKind::vandermonde;
    throw invalid_config("unknown generator kind '" + std::string(text) + "'");
}

/// Parity part of a systematic generator [I | P] over GF(2^ell). Row i holds
/// the coefficients of systematic symbol i in each of the c parities.
class Generator {
public:
    static Generator cauchy(std::size_t m, std::size_t c, FieldPtr field)
    {
        check_size(m, c, *field);
        Generator g(m, c, GeneratorKind::cauchy, std::move(field));
        // Points a_i = i and b_j = m + j are distinct, so a_i + b_j != 0.
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < c; ++j)
                g.coef_[i * c + j] = g.field_->inv(static_cast<Symbol>(i) ^ static_cast<Symbol>(m + j));
        return g;
    }

    static Generator vandermonde(std::size_t m, std::size_t c, FieldPtr field)
    {
        check_size(m, c, *field);
        Generator g(m, c, GeneratorKind::vandermonde, std::move(field));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t r = 0; r < c; ++r)
                g.coef_[i * c + r] = g.field_->alpha_pow(static_cast<long long>(i * r));
        return g;
    }

    static Generator make(GeneratorKind kind, std::size_t m, std::size_t c, FieldPtr field)
    {
        return kind == GeneratorKind::cauchy ? cauchy(m, c, std::move(field))
                                             : vandermonde(m, c, std::move(field));
    }

    std::size_t systematic_count() const noexcept { return m_; }
    std::size_t parity_count() const noexcept { return c_; }
    GeneratorKind kind() const noexcept { return kind_; }
    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }

    Symbol coefficient(std::size_t row, std::size_t parity) const noexcept { return coef_[row * c_ + parity]; }

private:
    Generator(std::size_t m, std::size_t c, GeneratorKind kind, FieldPtr field)
        : m_(m), c_(c), kind_(kind), field_(std::move(field)), coef_(m * c)
    {
    }

    static void check_size(std::size_t m, std::size_t c, const Field& field)
    {
        if (m == 0 || c == 0)
            throw invalid_config("generator needs at least one systematic and one parity symbol");
        if (m + c > field.size())
            throw field_too_small(std::to_string(m) + " + " + std::to_string(c) + " symbols exceed GF(2^" +
                                  std::to_string(field.ell()) + ")");
    }

    std::size_t m_;
    std::size_t c_;
    GeneratorKind kind_;
    FieldPtr field_;
    std::vector<Symbol> coef_;
};

using GeneratorPtr = std::shared_ptr<const Generator>;

inline std::vector<Symbol> encode_parities(std::span<const Symbol> message, const Generator& g)
{
    if (message.size() != g.systematic_count())
        throw length_mismatch("message has " + std::to_string(message.size()) + " symbols, generator expects " +
                              std::to_string(g.systematic_count()));
    const Field& f = g.field();
    std::vector<Symbol> parities(g.parity_count(), 0);
    for (std::size_t i = 0; i < message.size(); ++i) {
        if (message[i] == 0)
            continue;
        for (std::size_t r = 0; r < parities.size(); ++r)
            parities[r] ^= f.mul(message[i], g.coefficient(i, r));
    }
    return parities;
}

/// In-place Gauss-Jordan elimination of the n x n row-major system A x = b.
/// On success b holds x. Returns false when A is singular.
inline bool solve_square(std::span<Symbol> a, std::span<Symbol> b, const Field& f)
{
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot * n + col] == 0)
            ++pivot;
        if (pivot == n)
            return false;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a[pivot * n + j], a[col * n + j]);
            std::swap(b[pivot], b[col]);
        }
        const Symbol scale = f.inv(a[col * n + col]);
        for (std::size_t j = col; j < n; ++j)
            a[col * n + j] = f.mul(a[col * n + j], scale);
        b[col] = f.mul(b[col], scale);
        for (std::size_t row = 0; row < n; ++row) {
            const Symbol factor = a[row * n + col];
            if (row == col || factor == 0)
                continue;
            for (std::size_t j = col; j < n; ++j)
                a[row * n + j] ^= f.mul(factor, a[col * n + j]);
            b[row] ^= f.mul(factor, b[col]);
        }
    }
    return true;
}

/// Fills the erased systematic symbols from the parities listed in parity_idx.
/// parities[j] is the value of parity parity_idx[j]; entries of symbols at
/// erased positions are ignored.
inline std::vector<Symbol> erasure_decode(std::span<const Symbol> symbols, std::span<const std::size_t> erased_idx,
                                          std::span<const Symbol> parities, std::span<const std::size_t> parity_idx,
                                          const Generator& g)
{
    const std::size_t e = erased_idx.size();
    if (symbols.size() != g.systematic_count())
        throw length_mismatch("symbol vector length differs from generator");
    if (parity_idx.size() != e || parities.size() != e)
        throw length_mismatch("need exactly one parity per erasure");
    if (e > g.parity_count())
        throw invalid_config("more erasures than parities");

    std::vector<bool> erased(symbols.size(), false);
    for (auto idx : erased_idx) {
        if (idx >= symbols.size() || erased[idx])
            throw invalid_config("erasure index out of range or repeated");
        erased[idx] = true;
    }
    for (auto r : parity_idx)
        if (r >= g.parity_count())
            throw invalid_config("parity index out of range");

    const Field& f = g.field();
    std::vector<Symbol> rhs(parities.begin(), parities.end());
    std::vector<Symbol> a(e * e);
    for (std::size_t j = 0; j < e; ++j) {
        for (std::size_t i = 0; i < symbols.size(); ++i)
            if (!erased[i])
                rhs[j] ^= f.mul(symbols[i], g.coefficient(i, parity_idx[j]));
        for (std::size_t t = 0; t < e; ++t)
            a[j * e + t] = g.coefficient(erased_idx[t], parity_idx[j]);
    }
    if (!solve_square(a, rhs, f))
        throw singular_system("erasure system is singular for the chosen parities");

    std::vector<Symbol> out(symbols.begin(), symbols.end());
    for (std::size_t t = 0; t < e; ++t)
        out[erased_idx[t]] = rhs[t];
    return out;
}

inline bool verify_parities(std::span<const Symbol> y, std::span<const Symbol> parities,
                            std::span<const std::size_t> parity_idx, const Generator& g)
{
    if (y.size() != g.systematic_count() || parities.size() != parity_idx.size())
        throw length_mismatch("verify_parities: inconsistent lengths");
    const Field& f = g.field();
    for (std::size_t j = 0; j < parity_idx.size(); ++j) {
        Symbol acc = 0;
        for (std::size_t i = 0; i < y.size(); ++i)
            acc ^= f.mul(y[i], g.coefficient(i, parity_idx[j]));
        if (acc != parities[j])
            return false;
    }
    return true;
}

} // namespace locdel
