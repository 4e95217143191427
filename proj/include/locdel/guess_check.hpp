#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "locdel/bits.hpp"
#include "locdel/gf2e.hpp"
#include "locdel/mds.hpp"
#include "locdel/params.hpp"
#include "locdel/subsequence.hpp"

namespace locdel {

/// A hypothesis that the consecutive blocks [first_block, first_block + block_count)
/// lost `deletions` bits in total. Blocks are 0-based.
struct ErasedRun {
    std::size_t first_block = 0;
    std::size_t block_count = 2;
    std::size_t deletions = 0;

    friend auto operator<=>(const ErasedRun&, const ErasedRun&) = default;
};

/// Outcome of checking one case against both possibility criteria. All
/// checks are evaluated, so a verdict can report every reason a case fails.
struct CaseVerdict {
    bool solvable = false;          // erasure system had a unique solution
    bool parity_ok = false;         // remaining parities agree with the decoded string
    bool supersequence_ok = false;  // each decoded run is a supersequence of its received bits
    bool padding_ok = false;        // virtual padding of a short final block decoded to zero
    std::vector<Symbol> symbols;    // decoded message symbols, valid when solvable

    bool possible() const noexcept { return solvable && parity_ok && supersequence_ok && padding_ok; }
};

/// Guess-and-check core shared by the single- and multi-window decoders.
///
/// `systematic` holds the k - total received bits believed to carry the
/// message. Known blocks keep their nominal position shifted left by the
/// deletions attributed to runs before them. Per-shift prefix sums of the
/// parity contributions make each case O(c * runs) plus the small erasure solve.
class CaseEvaluator {
public:
    CaseEvaluator(const CodeParams& params, BitView systematic, std::span<const Symbol> parities,
                  std::size_t total_deletions)
        : p_(params), s_(systematic), parities_(parities.begin(), parities.end()), total_(total_deletions),
          prefix_(total_deletions + 1)
    {
        if (parities_.size() != p_.c)
            throw length_mismatch("expected " + std::to_string(p_.c) + " parity symbols");
        if (total_ > p_.k || s_.size() != p_.k - total_)
            throw length_mismatch("systematic part must hold k - deletions bits");
    }

    /// Runs must be sorted, disjoint, inside the message and carry exactly the
    /// total deletion count, each no more than its own bit length.
    bool admissible(std::span<const ErasedRun> runs) const noexcept
    {
        std::size_t next_free = 0, sum = 0, erased = 0;
        for (const auto& run : runs) {
            if (run.block_count == 0 || run.first_block < next_free || run.first_block + run.block_count > p_.m)
                return false;
            if (run.deletions > run_bits(run))
                return false;
            next_free = run.first_block + run.block_count;
            sum += run.deletions;
            erased += run.block_count;
        }
        return sum == total_ && erased <= p_.c && !runs.empty();
    }

    CaseVerdict evaluate(std::span<const ErasedRun> runs)
    {
        CaseVerdict v;
        run_case(runs, false, v);
        return v;
    }

    /// Decoded k-bit message when the case is possible.
    std::optional<Bits> candidate(std::span<const ErasedRun> runs)
    {
        if (!run_case(runs, true, scratch_))
            return std::nullopt;
        return symbols_to_bits(scratch_.symbols, *p_.field, p_.k);
    }

private:
    std::size_t run_bits(const ErasedRun& run) const noexcept
    {
        std::size_t bits = 0;
        for (std::size_t b = run.first_block; b < run.first_block + run.block_count; ++b)
            bits += p_.block_len(b);
        return bits;
    }

    // Prefix sums over blocks of sym(b, shift) * G(b, r), laid out [(b * c) + r].
    const std::vector<Symbol>& prefix_at(std::size_t shift)
    {
        auto& pre = prefix_[shift];
        if (!pre.empty())
            return pre;
        const Field& f = *p_.field;
        const Generator& g = *p_.generator;
        const std::size_t c = p_.c;
        pre.assign((p_.m + 1) * c, 0);
        for (std::size_t b = 0; b < p_.m; ++b) {
            const std::size_t start = p_.block_start(b);
            const std::size_t len = p_.block_len(b);
            Symbol sym = 0;
            if (start >= shift && start - shift + len <= s_.size())
                sym = read_symbol(s_.subspan(start - shift, len), static_cast<unsigned>(p_.ell));
            for (std::size_t r = 0; r < c; ++r)
                pre[(b + 1) * c + r] = pre[b * c + r] ^ f.mul(sym, g.coefficient(b, r));
        }
        return pre;
    }

    Symbol known_symbol(std::size_t b, std::size_t shift) const noexcept
    {
        return read_symbol(s_.subspan(p_.block_start(b) - shift, p_.block_len(b)), static_cast<unsigned>(p_.ell));
    }

    void add_range(std::size_t lo, std::size_t hi, std::size_t shift)
    {
        if (lo >= hi)
            return;
        const auto& pre = prefix_at(shift);
        for (std::size_t r = 0; r < p_.c; ++r)
            known_[r] ^= pre[hi * p_.c + r] ^ pre[lo * p_.c + r];
    }

    bool run_case(std::span<const ErasedRun> runs, bool short_circuit, CaseVerdict& v)
    {
        v = CaseVerdict{};
        if (!admissible(runs))
            return false;

        const Field& f = *p_.field;
        const Generator& g = *p_.generator;
        const std::size_t c = p_.c;

        known_.assign(c, 0);
        erased_.clear();
        std::size_t cursor = 0, shift = 0;
        for (const auto& run : runs) {
            add_range(cursor, run.first_block, shift);
            for (std::size_t b = run.first_block; b < run.first_block + run.block_count; ++b)
                erased_.push_back(b);
            cursor = run.first_block + run.block_count;
            shift += run.deletions;
        }
        add_range(cursor, p_.m, shift);

        const std::size_t e = erased_.size();
        matrix_.assign(e * e, 0);
        solution_.resize(e);
        for (std::size_t j = 0; j < e; ++j) {
            solution_[j] = parities_[j] ^ known_[j];
            for (std::size_t t = 0; t < e; ++t)
                matrix_[j * e + t] = g.coefficient(erased_[t], j);
        }
        v.solvable = solve_square(matrix_, solution_, f);
        if (!v.solvable)
            return false;

        v.parity_ok = true;
        for (std::size_t r = e; r < c && v.parity_ok; ++r) {
            Symbol acc = known_[r];
            for (std::size_t t = 0; t < e; ++t)
                acc ^= f.mul(solution_[t], g.coefficient(erased_[t], r));
            v.parity_ok = acc == parities_[r];
        }
        if (short_circuit && !v.parity_ok)
            return false;

        v.padding_ok = true;
        const std::size_t pad = p_.ell - p_.last_block_len;
        if (pad > 0 && erased_.back() == p_.m - 1)
            v.padding_ok = (solution_.back() & ((Symbol{1} << pad) - 1)) == 0;
        if (short_circuit && !v.padding_ok)
            return false;

        v.supersequence_ok = true;
        std::size_t t = 0;
        shift = 0;
        for (const auto& run : runs) {
            decoded_bits_.clear();
            for (std::size_t b = run.first_block; b < run.first_block + run.block_count; ++b, ++t)
                write_symbol(solution_[t], static_cast<unsigned>(p_.ell), decoded_bits_, p_.block_len(b));
            const std::size_t at = p_.block_start(run.first_block) - shift;
            const BitView received = s_.subspan(at, decoded_bits_.size() - run.deletions);
            if (!is_subsequence(received, decoded_bits_)) {
                v.supersequence_ok = false;
                if (short_circuit)
                    return false;
            }
            shift += run.deletions;
        }

        v.symbols.assign(p_.m, 0);
        cursor = 0;
        shift = 0;
        t = 0;
        for (const auto& run : runs) {
            for (std::size_t b = cursor; b < run.first_block; ++b)
                v.symbols[b] = known_symbol(b, shift);
            for (std::size_t b = run.first_block; b < run.first_block + run.block_count; ++b)
                v.symbols[b] = solution_[t++];
            cursor = run.first_block + run.block_count;
            shift += run.deletions;
        }
        for (std::size_t b = cursor; b < p_.m; ++b)
            v.symbols[b] = known_symbol(b, shift);

        return v.possible();
    }

    const CodeParams& p_;
    BitView s_;
    std::vector<Symbol> parities_;
    std::size_t total_;
    std::vector<std::vector<Symbol>> prefix_;

    std::vector<Symbol> known_;
    std::vector<std::size_t> erased_;
    std::vector<Symbol> matrix_;
    std::vector<Symbol> solution_;
    Bits decoded_bits_;
    CaseVerdict scratch_;
};

/// Aggregates possible cases: one distinct string is a success, several a failure.
struct CandidateSet {
    std::vector<Bits> distinct;
    std::optional<std::size_t> first_index;

    void add(Bits candidate, std::size_t index)
    {
        for (const auto& seen : distinct)
            if (seen == candidate)
                return;
        if (!first_index)
            first_index = index;
        distinct.push_back(std::move(candidate));
    }
};

} // namespace locdel
