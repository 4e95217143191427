#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "locdel/analysis.hpp"
#include "locdel/channel.hpp"
#include "locdel/gc_multi.hpp"
#include "locdel/gc_single.hpp"
#include "locdel/params.hpp"
#include "locdel/rng.hpp"

namespace locdel {

/// Deletions per window: an absolute count, or a fraction of w rounded half up.
struct DeltaSpec {
    bool fractional = true;
    double value = 1.0;

    static DeltaSpec absolute(std::size_t count) { return {false, static_cast<double>(count)}; }
    static DeltaSpec fraction(double f) { return {true, f}; }

    std::size_t resolve(std::size_t w) const
    {
        if (value < 0)
            throw invalid_config("negative deletion count");
        const double d = fractional ? std::floor(value * static_cast<double>(w) + 0.5) : value;
        if (d > static_cast<double>(w))
            throw invalid_config("deletions per window exceed w = " + std::to_string(w));
        return static_cast<std::size_t>(d);
    }
};

struct SimConfig {
    std::vector<std::size_t> k_list;
    std::size_t c = 3;
    std::size_t z = 1;
    DeltaSpec delta;
    std::optional<std::size_t> w;  // default ceil(log2 k)
    std::size_t trials = 100000;
    std::uint64_t master_seed = 1;
    SamplingMode mode = SamplingMode::whole_codeword;
    GeneratorKind kind = GeneratorKind::cauchy;
    unsigned workers = 1;
};

struct TrialRow {
    std::size_t k = 0;
    std::size_t w = 0;
    std::size_t ell = 0;
    std::size_t c = 0;
    std::size_t z = 1;
    std::size_t delta = 0;
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::size_t failures = 0;        // Failure or InvalidInput: the decoder abstained
    std::size_t invalid = 0;         // subset of failures that were InvalidInput
    std::size_t miscorrections = 0;  // wrong message reported as success; must stay 0
    double pr_failure = 0;
    double rate = 0;
    double bound = 1;
};

struct TrialReport {
    std::vector<TrialRow> rows;
};

namespace detail {

enum : std::uint64_t { kMessageSalt = 1, kPatternSalt = 2 };

struct Tally {
    std::size_t successes = 0, failures = 0, invalid = 0, miscorrections = 0;

    void add(const DecodeOutcome& out, BitView u)
    {
        if (const auto* ok = std::get_if<Success>(&out)) {
            if (std::equal(ok->message.begin(), ok->message.end(), u.begin(), u.end()))
                ++successes;
            else
                ++miscorrections;
        } else {
            ++failures;
            if (std::holds_alternative<InvalidInput>(out))
                ++invalid;
        }
    }

    void merge(const Tally& o)
    {
        successes += o.successes;
        failures += o.failures;
        invalid += o.invalid;
        miscorrections += o.miscorrections;
    }
};

} // namespace detail

/// Runs one configuration row. Trial t draws its message and its pattern from
/// streams keyed by (seed, k, t), so the counts do not depend on `workers`.
inline TrialRow run_row(const SimConfig& cfg, std::size_t k)
{
    if (cfg.trials < 1)
        throw invalid_config("need at least one trial");
    const std::size_t w = cfg.w.value_or(ceil_log2(k));
    const std::size_t delta = cfg.delta.resolve(w);

    const MultiParams mp = cfg.z > 1 ? multi_params(k, w, cfg.c, cfg.z, cfg.kind) : MultiParams{};
    const CodeParams sp = cfg.z > 1 ? mp.base : gc_params(k, w, cfg.c, cfg.kind);
    const PatternSpace space = cfg.z > 1 ? pattern_space(mp, cfg.mode) : pattern_space(sp, cfg.mode);
    const std::size_t deltas[1] = {delta};

    auto run_range = [&](std::size_t begin, std::size_t end) {
        detail::Tally tally;
        for (std::size_t t = begin; t < end; ++t) {
            Rng msg_rng(derive_seed({cfg.master_seed, k, t, detail::kMessageSalt}));
            Rng pat_rng(derive_seed({cfg.master_seed, k, t, detail::kPatternSalt}));
            const Bits u = msg_rng.bits(k);
            const DeletionPattern pat = sample_pattern(space, deltas, pat_rng);
            if (cfg.z > 1) {
                const Bits y = delete_localized(encode_multi(u, mp).bits, pat);
                tally.add(decode_multi(y, mp), u);
            } else {
                const Bits y = delete_localized(encode(u, sp).bits, pat);
                tally.add(decode(y, sp), u);
            }
        }
        return tally;
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(cfg.workers, static_cast<unsigned>(cfg.trials)));
    detail::Tally total;
    if (workers == 1) {
        total = run_range(0, cfg.trials);
    } else {
        std::vector<detail::Tally> parts(workers);
        std::vector<std::thread> pool;
        const std::size_t chunk = (cfg.trials + workers - 1) / workers;
        for (unsigned i = 0; i < workers; ++i) {
            const std::size_t b = std::min(cfg.trials, i * chunk);
            const std::size_t e = std::min(cfg.trials, b + chunk);
            pool.emplace_back([&parts, &run_range, i, b, e] { parts[i] = run_range(b, e); });
        }
        for (auto& th : pool)
            th.join();
        for (const auto& part : parts)
            total.merge(part);
    }

    TrialRow row;
    row.k = k;
    row.w = w;
    row.ell = sp.ell;
    row.c = cfg.c;
    row.z = cfg.z;
    row.delta = delta;
    row.trials = cfg.trials;
    row.successes = total.successes;
    row.failures = total.failures;
    row.invalid = total.invalid;
    row.miscorrections = total.miscorrections;
    row.pr_failure = static_cast<double>(row.failures) / static_cast<double>(row.trials);
    if (cfg.z > 1) {
        const BoundReport b = bound_multi(mp);
        row.rate = b.rate;
        row.bound = b.failure_bound;
    } else {
        const BoundReport b = bound_single(k, w, cfg.c);
        row.rate = b.rate;
        row.bound = b.failure_bound;
    }
    return row;
}

inline TrialReport run_trials(const SimConfig& cfg, const std::function<void(const TrialRow&)>& on_row = {})
{
    TrialReport report;
    for (auto k : cfg.k_list) {
        report.rows.push_back(run_row(cfg, k));
        if (on_row)
            on_row(report.rows.back());
    }
    return report;
}

inline std::string format_g6(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::string report_to_csv(const TrialReport& report)
{
    std::string out = "k,w,ell,c,z,delta,trials,failures,pr_failure,rate,bound,rate_2dp\n";
    char rate2[32];
    for (const auto& r : report.rows) {
        std::snprintf(rate2, sizeof rate2, "%.2f", r.rate);
        out += std::to_string(r.k) + ',' + std::to_string(r.w) + ',' + std::to_string(r.ell) + ',' +
               std::to_string(r.c) + ',' + std::to_string(r.z) + ',' + std::to_string(r.delta) + ',' +
               std::to_string(r.trials) + ',' + std::to_string(r.failures) + ',' + format_g6(r.pr_failure) + ',' +
               format_g6(r.rate) + ',' + format_g6(r.bound) + ',' + rate2 + '\n';
    }
    return out;
}

} // namespace locdel
