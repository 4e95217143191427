// locdel: encode, corrupt, decode, bound and simulate Guess & Check codes for
// localized deletions. Bit files hold '0'/'1' characters, optionally followed
// by a newline.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "locdel/locdel.hpp"

namespace {

using namespace locdel;

enum ExitCode : int { kOk = 0, kUsage = 1, kDecodeFailure = 2, kInvalidInput = 3 };

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Bits read_bit_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw usage_error("cannot open " + path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    Bits bits;
    bits.reserve(text.size());
    for (char ch : text) {
        if (ch == '0' || ch == '1')
            bits.push_back(static_cast<std::uint8_t>(ch - '0'));
        else if (ch != '\n')
            throw usage_error(path + ": unexpected byte in bit file");
    }
    return bits;
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw usage_error("cannot write " + path);
    out << text;
}

void write_bit_file(const std::string& path, BitView bits)
{
    write_text(path, to_string(bits) + "\n");
}

struct CodeOptions {
    std::size_t k = 0;
    std::size_t w = 0;
    std::size_t c = 0;
    std::size_t z = 1;
    std::string gen = "cauchy";

    void attach(CLI::App* app)
    {
        app->add_option("--k", k, "message length in bits")->required();
        app->add_option("--w", w, "window size in bits")->required();
        app->add_option("--c", c, "number of MDS parity symbols")->required();
        app->add_option("--z", z, "number of deletion windows")->check(CLI::PositiveNumber);
        app->add_option("--gen", gen, "generator kind")->check(CLI::IsMember({"cauchy", "vandermonde"}));
    }
};

std::vector<std::size_t> parse_list(const std::string& text)
{
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const auto v = std::stoull(item, &pos);
        if (pos != item.size())
            throw usage_error("bad list entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw usage_error("empty list");
    return out;
}

void print_bound(const BoundReport& r)
{
    std::printf("k=%zu\nw=%zu\nc=%zu\nz=%zu\nell=%zu\nn=%zu\nredundancy_bits=%zu\nrate=%s\n", r.k, r.w, r.c, r.z, r.ell,
                r.n, r.redundancy_bits, format_g6(r.rate).c_str());
    std::printf("case_count=%zu\nfailure_bound=%s\nregime=%s\ntheorem=%d\n", r.case_count,
                format_g6(r.failure_bound).c_str(), std::string(to_string(r.regime)).c_str(), r.theorem);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Guess & Check codes for deletions localized in windows"};
    app.require_subcommand(1);

    CodeOptions enc_opts;
    std::string enc_in, enc_out;
    auto* enc = app.add_subcommand("encode", "encode a message bit file");
    enc_opts.attach(enc);
    enc->add_option("--in", enc_in, "message bit file")->required();
    enc->add_option("--out", enc_out, "codeword bit file (stdout if omitted)");

    std::string cor_pattern, cor_in, cor_out;
    bool cor_random = false;
    std::size_t cor_delta = 0, cor_w = 0, cor_z = 1, cor_k = 0;
    std::uint64_t cor_seed = 1;
    std::string cor_mode = "whole";
    auto* cor = app.add_subcommand("corrupt", "delete bits from a codeword");
    cor->add_option("--pattern", cor_pattern, "start:off,off;start:off,... (1-based starts)");
    cor->add_flag("--random", cor_random, "sample a random localized pattern");
    cor->add_option("--delta", cor_delta, "deletions per window (random mode)");
    cor->add_option("--w", cor_w, "window size (required for --random, validates --pattern)");
    cor->add_option("--z", cor_z, "number of windows (random mode)")->check(CLI::PositiveNumber);
    cor->add_option("--seed", cor_seed, "random seed");
    cor->add_option("--k", cor_k, "systematic length, for --mode systematic");
    cor->add_option("--mode", cor_mode, "window placement region")->check(CLI::IsMember({"whole", "systematic"}));
    cor->add_option("--in", cor_in, "codeword bit file")->required();
    cor->add_option("--out", cor_out, "received bit file (stdout if omitted)");

    CodeOptions dec_opts;
    std::string dec_in, dec_out;
    auto* dec = app.add_subcommand("decode", "decode a received bit file");
    dec_opts.attach(dec);
    dec->add_option("--in", dec_in, "received bit file")->required();
    dec->add_option("--out", dec_out, "decoded message bit file (stdout if omitted)");

    CodeOptions bnd_opts;
    auto* bnd = app.add_subcommand("bound", "print redundancy, rate and failure bound");
    bnd_opts.attach(bnd);

    std::string sim_klist = "128,256,512,1024,2048,4096", sim_out, sim_mode = "whole", sim_gen = "cauchy";
    std::size_t sim_c = 3, sim_z = 1, sim_trials = 100000;
    std::optional<std::size_t> sim_w, sim_delta;
    double sim_frac = 1.0;
    std::uint64_t sim_seed = 42;
    unsigned sim_workers = 1;
    auto* sim = app.add_subcommand("simulate", "Monte Carlo failure-rate table as CSV");
    sim->add_option("--k-list", sim_klist, "comma-separated message lengths");
    sim->add_option("--c", sim_c, "number of MDS parity symbols");
    sim->add_option("--z", sim_z, "number of windows")->check(CLI::PositiveNumber);
    sim->add_option("--w", sim_w, "window size (default ceil(log2 k))");
    auto* frac_opt = sim->add_option("--delta-frac", sim_frac, "deletions per window as a fraction of w");
    auto* abs_opt = sim->add_option("--delta", sim_delta, "deletions per window (absolute)");
    frac_opt->excludes(abs_opt);
    sim->add_option("--trials", sim_trials, "trials per k")->check(CLI::PositiveNumber);
    sim->add_option("--seed", sim_seed, "master seed");
    sim->add_option("--mode", sim_mode, "window placement region")->check(CLI::IsMember({"whole", "systematic"}));
    sim->add_option("--gen", sim_gen, "generator kind")->check(CLI::IsMember({"cauchy", "vandermonde"}));
    sim->add_option("--workers", sim_workers, "worker threads")->check(CLI::PositiveNumber);
    sim->add_option("--out", sim_out, "CSV output (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*enc) {
            const Bits u = read_bit_file(enc_in);
            const auto kind = parse_generator_kind(enc_opts.gen);
            const Codeword cw = enc_opts.z > 1
                                    ? encode_multi(u, multi_params(enc_opts.k, enc_opts.w, enc_opts.c, enc_opts.z, kind))
                                    : encode(u, gc_params(enc_opts.k, enc_opts.w, enc_opts.c, kind));
            write_bit_file(enc_out, cw.bits);
            return kOk;
        }

        if (*cor) {
            const Bits x = read_bit_file(cor_in);
            DeletionPattern pat;
            WindowLimits limits;
            if (cor_random) {
                if (cor_w == 0)
                    throw usage_error("--random needs --w");
                const auto mode = cor_mode == "whole" ? SamplingMode::whole_codeword : SamplingMode::systematic_only;
                if (mode == SamplingMode::systematic_only && cor_k == 0)
                    throw usage_error("--mode systematic needs --k");
                const PatternSpace space{x.size(), cor_k ? cor_k : x.size(), cor_w, cor_z, mode};
                const std::size_t deltas[1] = {cor_delta};
                pat = sample_pattern(space, deltas, cor_seed);
                limits = {cor_w, cor_z};
            } else {
                if (cor_pattern.empty() && cor->count("--pattern") == 0)
                    throw usage_error("give --pattern or --random");
                pat = parse_pattern(cor_pattern);
                if (cor_w)
                    limits.w = cor_w;
            }
            std::cerr << "pattern " << format_pattern(pat) << "\n";
            write_bit_file(cor_out, delete_localized(x, pat, limits));
            return kOk;
        }

        if (*dec) {
            const Bits y = read_bit_file(dec_in);
            const auto kind = parse_generator_kind(dec_opts.gen);
            const DecodeOutcome out =
                dec_opts.z > 1 ? decode_multi(y, multi_params(dec_opts.k, dec_opts.w, dec_opts.c, dec_opts.z, kind))
                               : decode(y, gc_params(dec_opts.k, dec_opts.w, dec_opts.c, kind));
            if (const auto* ok = std::get_if<Success>(&out)) {
                if (ok->guess)
                    std::cerr << "decoded via case " << *ok->guess + 1 << "\n";
                else
                    std::cerr << "decoded directly from the systematic bits\n";
                write_bit_file(dec_out, ok->message);
                return kOk;
            }
            if (const auto* fail = std::get_if<Failure>(&out)) {
                std::cerr << "decoding failure: " << fail->candidates.size() << " distinct candidates\n";
                for (const auto& cand : fail->candidates)
                    std::cerr << to_string(cand) << "\n";
                return kDecodeFailure;
            }
            std::cerr << "invalid input: " << std::get<InvalidInput>(out).reason << "\n";
            return kInvalidInput;
        }

        if (*bnd) {
            if (bnd_opts.z > 1)
                print_bound(bound_multi(bnd_opts.k, bnd_opts.w, bnd_opts.c, bnd_opts.z));
            else
                print_bound(bound_single(bnd_opts.k, bnd_opts.w, bnd_opts.c));
            return kOk;
        }

        if (*sim) {
            SimConfig cfg;
            cfg.k_list = parse_list(sim_klist);
            cfg.c = sim_c;
            cfg.z = sim_z;
            cfg.w = sim_w;
            cfg.delta = sim_delta ? DeltaSpec::absolute(*sim_delta) : DeltaSpec::fraction(sim_frac);
            cfg.trials = sim_trials;
            cfg.master_seed = sim_seed;
            cfg.mode = sim_mode == "whole" ? SamplingMode::whole_codeword : SamplingMode::systematic_only;
            cfg.kind = parse_generator_kind(sim_gen);
            cfg.workers = sim_workers;
            const TrialReport report = run_trials(cfg, [](const TrialRow& row) {
                std::cerr << "k=" << row.k << " delta=" << row.delta << " failures=" << row.failures << "/"
                          << row.trials << " miscorrections=" << row.miscorrections << "\n";
            });
            write_text(sim_out, report_to_csv(report));
            for (const auto& row : report.rows)
                if (row.miscorrections != 0)
                    return kDecodeFailure;
            return kOk;
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const locdel::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
