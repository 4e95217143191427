#pragma once

// Slow reference computations used to cross-check the library. Nothing here
// calls into the code under test beyond plain data accessors.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "locdel/bits.hpp"
#include "locdel/mds.hpp"

namespace oracle {

using locdel::Bits;
using locdel::BitView;
using locdel::Symbol;

// Carry-less multiply with polynomial reduction.
inline Symbol mul(Symbol a, Symbol b, unsigned ell, std::uint32_t poly)
{
    std::uint64_t acc = 0;
    for (unsigned i = 0; i < ell; ++i)
        if ((b >> i) & 1u)
            acc ^= static_cast<std::uint64_t>(a) << i;
    for (int bit = 2 * static_cast<int>(ell) - 2; bit >= static_cast<int>(ell); --bit)
        if ((acc >> bit) & 1u)
            acc ^= static_cast<std::uint64_t>(poly) << (bit - static_cast<int>(ell));
    return static_cast<Symbol>(acc);
}

// Laplace expansion along the first row; fine for n <= 6.
inline Symbol determinant(const std::vector<std::vector<Symbol>>& a, unsigned ell, std::uint32_t poly)
{
    const std::size_t n = a.size();
    if (n == 1)
        return a[0][0];
    Symbol det = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (a[0][col] == 0)
            continue;
        std::vector<std::vector<Symbol>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Symbol> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col)
                    row.push_back(a[r][c]);
            minor.push_back(std::move(row));
        }
        det ^= mul(a[0][col], determinant(minor, ell, poly), ell, poly);  // signs vanish in characteristic 2
    }
    return det;
}

inline void for_each_combination(std::size_t n, std::size_t r,
                                 const std::function<void(const std::vector<std::size_t>&)>& fn)
{
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (idx.size() == r) {
            fn(idx);
            return;
        }
        for (std::size_t i = from; i + (r - idx.size()) <= n; ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(0);
}

inline void for_each_subset_mask(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& fn)
{
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u)
                idx.push_back(i);
        fn(idx);
    }
}

// A generator [I | P] is MDS iff every square submatrix of P is nonsingular.
inline bool all_square_minors_nonzero(const locdel::Generator& g)
{
    const unsigned ell = g.field().ell();
    const std::uint32_t poly = g.field().primitive_poly();
    const std::size_t m = g.systematic_count(), c = g.parity_count();
    bool ok = true;
    for (std::size_t size = 1; size <= std::min(m, c) && ok; ++size)
        for_each_combination(m, size, [&](const std::vector<std::size_t>& rows) {
            for_each_combination(c, size, [&](const std::vector<std::size_t>& cols) {
                if (!ok)
                    return;
                std::vector<std::vector<Symbol>> sub(size, std::vector<Symbol>(size));
                for (std::size_t i = 0; i < size; ++i)
                    for (std::size_t j = 0; j < size; ++j)
                        sub[i][j] = g.coefficient(rows[i], cols[j]);
                ok = determinant(sub, ell, poly) != 0;
            });
        });
    return ok;
}

// Every assignment of the erased symbols that reproduces the given parities.
inline std::vector<std::vector<Symbol>> brute_force_erasures(const std::vector<Symbol>& known,
                                                             const std::vector<std::size_t>& erased,
                                                             const std::vector<Symbol>& parities,
                                                             const std::vector<std::size_t>& parity_idx,
                                                             const locdel::Generator& g)
{
    const unsigned ell = g.field().ell();
    const std::uint32_t poly = g.field().primitive_poly();
    const std::uint64_t q = std::uint64_t{1} << ell;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < erased.size(); ++i)
        total *= q;
    std::vector<std::vector<Symbol>> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        auto y = known;
        std::uint64_t rest = code;
        for (auto e : erased) {
            y[e] = static_cast<Symbol>(rest % q);
            rest /= q;
        }
        bool match = true;
        for (std::size_t j = 0; j < parity_idx.size() && match; ++j) {
            Symbol acc = 0;
            for (std::size_t i = 0; i < y.size(); ++i)
                acc ^= mul(y[i], g.coefficient(i, parity_idx[j]), ell, poly);
            match = acc == parities[j];
        }
        if (match)
            out.push_back(std::move(y));
    }
    return out;
}

// Longest common subsequence test for sub being a subsequence of sup.
inline bool is_subsequence_dp(BitView sub, BitView sup)
{
    std::vector<std::vector<std::size_t>> t(sub.size() + 1, std::vector<std::size_t>(sup.size() + 1, 0));
    for (std::size_t i = 1; i <= sub.size(); ++i)
        for (std::size_t j = 1; j <= sup.size(); ++j)
            t[i][j] = sub[i - 1] == sup[j - 1] ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
    return t[sub.size()][sup.size()] == sub.size();
}

// All distinct strings reachable from x by deleting exactly d bits anywhere.
inline std::set<Bits> all_deletions(BitView x, std::size_t d)
{
    std::set<Bits> out;
    for_each_combination(x.size(), d, [&](const std::vector<std::size_t>& pos) {
        Bits y;
        std::size_t p = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (p < pos.size() && pos[p] == i) {
                ++p;
                continue;
            }
            y.push_back(x[i]);
        }
        out.insert(std::move(y));
    });
    return out;
}

// Parity bits of u recomputed from scratch: MSB-first symbols, zero-padded
// final block, p_j = sum_i u_i g(i, j), each parity written MSB-first.
inline Bits parity_bits(BitView u, const locdel::Generator& g)
{
    const unsigned ell = g.field().ell();
    const std::uint32_t poly = g.field().primitive_poly();
    std::vector<Symbol> sym(g.systematic_count(), 0);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i])
            sym[i / ell] |= Symbol{1} << (ell - 1 - i % ell);
    Bits out;
    for (std::size_t j = 0; j < g.parity_count(); ++j) {
        Symbol acc = 0;
        for (std::size_t i = 0; i < sym.size(); ++i)
            acc ^= mul(sym[i], g.coefficient(i, j), ell, poly);
        for (unsigned b = 0; b < ell; ++b)
            out.push_back(static_cast<std::uint8_t>((acc >> (ell - 1 - b)) & 1u));
    }
    return out;
}

} // namespace oracle
