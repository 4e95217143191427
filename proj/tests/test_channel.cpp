#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <vector>

#include "locdel/channel.hpp"
#include "locdel/gc_single.hpp"
#include "locdel/subsequence.hpp"

using namespace locdel;

TEST(DeleteLocalized, TwoWindowExample)
{
    const Bits x = bits_from_string("100101001010010010110");
    const DeletionPattern pat{{Window{3, {0, 1, 3}}, Window{15, {0, 2}}}};
    EXPECT_EQ(delete_localized(x, pat), bits_from_string("1000010100100110"));
    EXPECT_EQ(delete_localized(x, pat, {5, 2}), bits_from_string("1000010100100110"));
}

TEST(DeleteLocalized, GoldenDecodingPattern)
{
    const Bits x = bits_from_string("110010100111100000001100110000001");
    const DeletionPattern pat{{Window{7, {0, 2, 3}}}};
    EXPECT_EQ(delete_localized(x, pat, {4, 1}), bits_from_string("110010011100000001100110000001"));
}

TEST(DeleteLocalized, EmptyPatternIsIdentity)
{
    const Bits x = bits_from_string("0110");
    EXPECT_EQ(delete_localized(x, DeletionPattern{}), x);
    EXPECT_EQ(delete_localized(x, DeletionPattern{{Window{2, {}}}}), x);
}

TEST(DeleteLocalized, RejectsInvalidPatterns)
{
    const Bits x(20, 0);
    EXPECT_THROW(delete_localized(x, {{Window{0, {0}}}}), invalid_pattern);
    EXPECT_THROW(delete_localized(x, {{Window{3, {1, 1}}}}), invalid_pattern);
    EXPECT_THROW(delete_localized(x, {{Window{3, {2, 1}}}}), invalid_pattern);
    EXPECT_THROW(delete_localized(x, {{Window{20, {1}}}}), invalid_pattern);
    EXPECT_THROW(delete_localized(x, {{Window{3, {4}}}}, {4, 1}), invalid_pattern);
    EXPECT_THROW(delete_localized(x, {{Window{3, {0}}, Window{5, {0}}}}, {4, 2}), invalid_pattern);
    EXPECT_THROW(delete_localized(x, {{Window{3, {0}}, Window{9, {0}}}}, {4, 1}), invalid_pattern);
    EXPECT_THROW(delete_localized(x, {{Window{9, {0}}, Window{3, {0}}}}), invalid_pattern);
}

TEST(DeleteLocalized, BurstEqualsSliceRemoval)
{
    Rng rng(5);
    for (int rep = 0; rep < 100; ++rep) {
        const Bits x = rng.bits(40);
        const std::size_t len = 1 + static_cast<std::size_t>(rng.below(8));
        const std::size_t start = 1 + static_cast<std::size_t>(rng.below(40 - len + 1));
        Window win{start, {}};
        for (std::size_t i = 0; i < len; ++i)
            win.offsets.push_back(i);
        Bits expected(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(start - 1));
        expected.insert(expected.end(), x.begin() + static_cast<std::ptrdiff_t>(start - 1 + len), x.end());
        EXPECT_EQ(delete_localized(x, {{win}}), expected);
    }
}

TEST(PatternText, RoundTrip)
{
    const DeletionPattern pat{{Window{3, {0, 1, 3}}, Window{15, {0, 2}}}};
    EXPECT_EQ(format_pattern(pat), "3:0,1,3;15:0,2");
    EXPECT_EQ(parse_pattern("3:0,1,3;15:0,2"), pat);
    EXPECT_EQ(parse_pattern(format_pattern(DeletionPattern{{Window{4, {}}}})), (DeletionPattern{{Window{4, {}}}}));
    EXPECT_EQ(parse_pattern(""), DeletionPattern{});
}

TEST(PatternText, RejectsMalformedText)
{
    EXPECT_THROW(parse_pattern("3"), invalid_pattern);
    EXPECT_THROW(parse_pattern("a:1"), invalid_pattern);
    EXPECT_THROW(parse_pattern("3:1,x"), invalid_pattern);
    EXPECT_THROW(parse_pattern("3:-1"), invalid_pattern);
    EXPECT_THROW(parse_pattern("3:1;;4:0"), invalid_pattern);
}

TEST(Sampler, DeterministicForSeed)
{
    const auto space = pattern_space(gc_params(16, 4, 3));
    const std::size_t d[1] = {2};
    const auto a = sample_pattern(space, d, std::uint64_t{77});
    EXPECT_EQ(a, sample_pattern(space, d, std::uint64_t{77}));
    ASSERT_EQ(a.windows.size(), 1u);
    EXPECT_EQ(a.windows[0].offsets.size(), 2u);
    bool differs = false;
    for (std::uint64_t s = 0; s < 20 && !differs; ++s)
        differs = sample_pattern(space, d, s) != a;
    EXPECT_TRUE(differs);
}

TEST(Sampler, FullWindowIsBurst)
{
    const auto p = gc_params(64, 6, 3);
    const auto space = pattern_space(p);
    const std::size_t d[1] = {6};
    Rng rng(3);
    for (int rep = 0; rep < 200; ++rep) {
        const auto pat = sample_pattern(space, d, rng);
        EXPECT_EQ(pat.windows[0].offsets, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
        EXPECT_GE(pat.windows[0].start, 1u);
        EXPECT_LE(pat.windows[0].start + p.w - 1, p.codeword_length());
    }
}

TEST(Sampler, RejectsImpossibleRequests)
{
    const auto space = pattern_space(gc_params(16, 4, 3));
    const std::size_t too_many[1] = {5};
    EXPECT_THROW(sample_pattern(space, too_many, std::uint64_t{1}), invalid_config);
    const std::size_t wrong_count[2] = {1, 1};
    EXPECT_THROW(sample_pattern(space, wrong_count, std::uint64_t{1}), invalid_config);
}

TEST(Sampler, SystematicModeStaysInMessage)
{
    const auto p = gc_params(128, 7, 3);
    const auto space = pattern_space(p, SamplingMode::systematic_only);
    const std::size_t d[1] = {3};
    Rng rng(8);
    for (int rep = 0; rep < 1000; ++rep) {
        const auto pat = sample_pattern(space, d, rng);
        EXPECT_LE(pat.windows[0].start + p.w - 1, p.k);
    }
}

TEST(Sampler, WindowStartsAreUniform)
{
    const auto p = gc_params(128, 7, 3);
    const auto space = pattern_space(p);
    const std::size_t positions = p.codeword_length() - p.w + 1;
    const std::size_t d[1] = {3};
    std::vector<double> hist(positions, 0);
    Rng rng(2024);
    const std::size_t samples = 100000;
    for (std::size_t i = 0; i < samples; ++i)
        hist[sample_pattern(space, d, rng).windows[0].start - 1] += 1;
    const double expect = static_cast<double>(samples) / static_cast<double>(positions);
    double chi2 = 0;
    for (double h : hist)
        chi2 += (h - expect) * (h - expect) / expect;
    const double dof = static_cast<double>(positions - 1);
    EXPECT_LT(chi2, dof + 3 * std::sqrt(2 * dof));
}

TEST(Sampler, OffsetsAreUniform)
{
    const auto space = pattern_space(gc_params(64, 6, 3));
    const std::size_t d[1] = {2};
    std::vector<double> hits(6, 0);
    Rng rng(99);
    const std::size_t samples = 60000;
    for (std::size_t i = 0; i < samples; ++i) {
        const auto pat = sample_pattern(space, d, rng);
        for (auto o : pat.windows[0].offsets)
            hits[o] += 1;
    }
    for (double h : hits)
        EXPECT_NEAR(h / static_cast<double>(samples), 2.0 / 6.0, 0.01);
}

TEST(Sampler, MultiWindowPlacementsUniformAndDisjoint)
{
    // Tiny space: length 10, w = 3, z = 2 has C(10 - 6 + 2, 2) = 15 placements.
    const PatternSpace space{10, 10, 3, 2, SamplingMode::whole_codeword};
    const std::size_t d[1] = {1};
    std::map<std::pair<std::size_t, std::size_t>, double> hist;
    Rng rng(4);
    const std::size_t samples = 60000;
    for (std::size_t i = 0; i < samples; ++i) {
        const auto pat = sample_pattern(space, d, rng);
        ASSERT_EQ(pat.windows.size(), 2u);
        ASSERT_GE(pat.windows[1].start, pat.windows[0].start + 3);
        ASSERT_LE(pat.windows[1].start + 2, 10u);
        hist[{pat.windows[0].start, pat.windows[1].start}] += 1;
    }
    EXPECT_EQ(hist.size(), 15u);
    for (const auto& [key, h] : hist)
        EXPECT_NEAR(h / static_cast<double>(samples), 1.0 / 15.0, 0.006);
}

TEST(Invariants, LengthAndSubsequence)
{
    const auto p = gc_params(128, 7, 3);
    const auto space = pattern_space(p);
    Rng rng(12);
    for (int rep = 0; rep < 500; ++rep) {
        const Bits x = encode(rng.bits(p.k), p).bits;
        const std::size_t d[1] = {static_cast<std::size_t>(rng.below(p.w + 1))};
        const auto pat = sample_pattern(space, d, rng);
        const Bits y = delete_localized(x, pat, {p.w, 1});
        EXPECT_EQ(y.size(), x.size() - pat.total());
        EXPECT_TRUE(is_subsequence(y, x));
    }
}
