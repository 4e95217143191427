#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "locdel/bits.hpp"
#include "locdel/channel.hpp"
#include "locdel/error.hpp"
#include "locdel/gc_multi.hpp"
#include "locdel/gc_single.hpp"
#include "locdel/params.hpp"

namespace locdel {

// small_window: w < ceil(log2 k), chunks of log k bits.
// large_window: w >= ceil(log2 k), chunks of w bits.
enum class Regime { small_window, large_window };

inline std::string_view to_string(Regime r)
{
    return r == Regime::small_window ? "small-window" : "large-window";
}

struct BoundReport {
    std::size_t k = 0;
    std::size_t w = 0;
    std::size_t c = 0;
    std::size_t z = 1;
    std::size_t ell = 0;
    std::size_t n = 0;
    std::size_t redundancy_bits = 0;
    std::size_t case_count = 0;
    double rate = 0;
    double raw_bound = 0;      // before clamping
    double failure_bound = 0;  // clamped to [0, 1]
    Regime regime = Regime::large_window;
    int theorem = 0;
};

inline Regime regime_for(std::size_t k, std::size_t w)
{
    return w < ceil_log2(k) ? Regime::small_window : Regime::large_window;
}

inline std::pair<std::size_t, double> rate_single(std::size_t k, std::size_t w, std::size_t c)
{
    const CodeParams p = gc_params(k, w, c);
    const std::size_t n = p.codeword_length();
    return {n, static_cast<double>(k) / static_cast<double>(n)};
}

/// Union bound over the m - 1 wrong guesses, loosened to (k/ell) 2^{-(c-3) ell}.
inline BoundReport bound_single(std::size_t k, std::size_t w, std::size_t c)
{
    const CodeParams p = gc_params(k, w, c);
    BoundReport r;
    r.k = k;
    r.w = w;
    r.c = c;
    r.ell = p.ell;
    r.n = p.codeword_length();
    r.redundancy_bits = r.n - k;
    r.case_count = p.m - 1;
    r.rate = static_cast<double>(k) / static_cast<double>(r.n);
    r.raw_bound = static_cast<double>(k) / static_cast<double>(p.ell) *
                  std::exp2(-static_cast<double>((c - 3) * p.ell));
    r.failure_bound = std::clamp(r.raw_bound, 0.0, 1.0);
    r.regime = regime_for(k, w);
    r.theorem = r.regime == Regime::small_window ? 1 : 2;
    return r;
}

inline double binomial(std::size_t n, std::size_t r)
{
    if (r > n)
        return 0;
    double out = 1;
    for (std::size_t i = 1; i <= r; ++i)
        out = out * static_cast<double>(n - r + i) / static_cast<double>(i);
    return out;
}

/// Number of ways to split `total` into `parts` counts, each in [0, cap].
inline double bounded_compositions(std::size_t total, std::size_t parts, std::size_t cap)
{
    double sum = 0;
    for (std::size_t j = 0; j <= parts && j * (cap + 1) <= total; ++j) {
        const double term = binomial(parts, j) * binomial(total - j * (cap + 1) + parts - 1, parts - 1);
        sum += (j % 2 ? -term : term);
    }
    return sum;
}

/// Size of enumerate_cases(p, total) in closed form: z non-overlapping block
/// pairs among m blocks, times the bounded compositions of total.
inline double disjoint_case_count(const MultiParams& p, std::size_t total)
{
    const std::size_t m = p.base.m;
    if (m < 2 * p.z)
        return 0;
    return binomial(m - p.z, p.z) * bounded_compositions(total, p.z, p.base.w);
}

/// (t) 2^{-ell (c - 3z)} with t the largest case count over all deletion totals.
inline BoundReport bound_multi(const MultiParams& p)
{
    const CodeParams& b = p.base;
    BoundReport r;
    r.k = b.k;
    r.w = b.w;
    r.c = b.c;
    r.z = p.z;
    r.ell = b.ell;
    r.n = p.codeword_length();
    r.redundancy_bits = r.n - b.k;
    r.rate = static_cast<double>(b.k) / static_cast<double>(r.n);
    double t = 0;
    for (std::size_t total = 0; total <= p.max_deletions(); ++total)
        t = std::max(t, disjoint_case_count(p, total));
    r.case_count = static_cast<std::size_t>(t);
    const double exponent = static_cast<double>(b.ell) * (static_cast<double>(b.c) - 3.0 * static_cast<double>(p.z));
    r.raw_bound = t * std::exp2(-exponent);
    r.failure_bound = std::clamp(r.raw_bound, 0.0, 1.0);
    r.regime = regime_for(b.k, b.w);
    if (p.z == 1)
        r.theorem = r.regime == Regime::small_window ? 1 : 2;
    else
        r.theorem = r.regime == Regime::small_window ? 3 : 4;
    return r;
}

inline BoundReport bound_multi(std::size_t k, std::size_t w, std::size_t c, std::size_t z)
{
    return bound_multi(multi_params(k, w, c, z));
}

/// Window starts (1-based) crossed with per-window deletion counts; every
/// offset subset of the given size is enumerated.
struct OracleScope {
    std::vector<std::size_t> starts;
    std::vector<std::size_t> deltas;
};

inline OracleScope full_scope(const CodeParams& p)
{
    OracleScope scope;
    for (std::size_t s = 1; s + p.w - 1 <= p.codeword_length(); ++s)
        scope.starts.push_back(s);
    for (std::size_t d = 0; d <= p.w; ++d)
        scope.deltas.push_back(d);
    return scope;
}

struct OracleReport {
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::size_t miscorrections = 0;
    std::size_t invalid = 0;
    std::vector<DeletionPattern> failure_patterns;
    std::vector<DeletionPattern> miscorrection_patterns;
    std::vector<DeletionPattern> invalid_patterns;

    bool clean() const noexcept { return miscorrections == 0 && invalid == 0; }
};

inline constexpr double kOracleMaxPatterns = 1e7;

namespace detail {

// Visits every sorted size-r subset of [0, n).
template <class Fn>
void for_each_subset(std::size_t n, std::size_t r, Fn&& fn)
{
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i)
        idx[i] = i;
    while (true) {
        fn(std::as_const(idx));
        if (r == 0)
            return;
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace detail

/// Runs encode, delete and decode for every pattern in scope and tallies the outcomes.
inline OracleReport exhaustive_oracle(const CodeParams& p, BitView u, const OracleScope& scope)
{
    double patterns = 0;
    for (auto d : scope.deltas) {
        if (d > p.w)
            throw invalid_config("scope delta exceeds w");
        patterns += binomial(p.w, d);
    }
    patterns *= static_cast<double>(scope.starts.size());
    if (patterns > kOracleMaxPatterns)
        throw scope_too_large("oracle scope has " + std::to_string(patterns) + " patterns");

    const Bits x = encode(u, p).bits;
    OracleReport report;
    for (auto start : scope.starts) {
        for (auto d : scope.deltas) {
            detail::for_each_subset(p.w, d, [&](const std::vector<std::size_t>& offsets) {
                DeletionPattern pat{{Window{start, offsets}}};
                const Bits y = delete_localized(x, pat, {p.w, 1});
                const DecodeOutcome out = decode(y, p);
                ++report.trials;
                if (const auto* ok = std::get_if<Success>(&out)) {
                    if (!std::equal(ok->message.begin(), ok->message.end(), u.begin(), u.end())) {
                        ++report.miscorrections;
                        report.miscorrection_patterns.push_back(pat);
                    }
                } else if (std::holds_alternative<Failure>(out)) {
                    ++report.failures;
                    report.failure_patterns.push_back(pat);
                } else {
                    ++report.invalid;
                    report.invalid_patterns.push_back(pat);
                }
            });
        }
    }
    return report;
}

} // namespace locdel
