#include "eulerian/word.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <functional>

using namespace eulerian;

namespace {

// Every word whose absolute values form a subset of [5], all sign choices.
void for_each_small_word(const std::function<void(const Word&)>& visit)
{
    for (unsigned subset = 0; subset < 32; ++subset) {
        std::vector<int> abs_values;
        for (int v = 1; v <= 5; ++v)
            if ((subset >> (v - 1)) & 1u)
                abs_values.push_back(v);
        const int k = static_cast<int>(abs_values.size());
        do {
            for (unsigned mask = 0; mask < (1u << k); ++mask) {
                std::vector<int> w(abs_values);
                for (int p = 0; p < k; ++p)
                    if ((mask >> p) & 1u)
                        w[static_cast<std::size_t>(p)] = -w[static_cast<std::size_t>(p)];
                visit(Word(w));
            }
        } while (std::next_permutation(abs_values.begin(), abs_values.end()));
    }
}

}  // namespace

TEST(WordTest, RejectsZeroAndRepeatedAbsoluteValues)
{
    EXPECT_THROW(Word({1, 0, 2}), InvalidWord);
    EXPECT_THROW(Word({3, -3}), InvalidWord);
    EXPECT_THROW(GroundSet({2, -2}), InvalidWord);
    EXPECT_NO_THROW(Word({}));
}

TEST(WordTest, GroundSetIsSortedAndFindsMinimalAbsoluteValue)
{
    GroundSet x{8, -7, 2, -5};
    EXPECT_EQ(std::vector<int>(x.begin(), x.end()), (std::vector<int>{-7, -5, 2, 8}));
    EXPECT_EQ(x.min_abs_element(), 2);
    EXPECT_TRUE(x.contains(-5));
    EXPECT_FALSE(x.contains(5));
    EXPECT_THROW(GroundSet{}.min_abs_element(), InvalidWord);
}

TEST(DescentTest, TypeAExamples)
{
    EXPECT_EQ(des(Word{1, 2, 3}), 0);
    EXPECT_EQ(des(Word{8, 2, 1, 6, 7, 4, 5, 3}), 4);
    EXPECT_EQ(des(Word{2, 1, 3}), 1);
    EXPECT_EQ(des(Word{}), 0);
    EXPECT_EQ(des(Word{5}), 0);
}

TEST(DescentTest, TypeBExamples)
{
    EXPECT_EQ(des_b(Word{-4, 2, 1, -7, -6, 5, 8, 3}), 4);
    EXPECT_EQ(des_b(Word{1, 2, 3, 4, 5, 6}), 0);
    EXPECT_EQ(des_b(Word{-3, 4, -1, 5, 9, -7, 2, -8, 6}), 4);
    EXPECT_EQ(des_b(Word{}), 0);
}

TEST(DescentTest, TypeDExamples)
{
    EXPECT_EQ(des_d(Word{2, 1}), 1);
    EXPECT_EQ(des_d(Word{-1, -2}), 2);
    EXPECT_EQ(des_d(Word{1}), 0);
    EXPECT_EQ(des_d(Word{-1}), 0);
    EXPECT_EQ(des_d(Word{}), 0);
}

TEST(ReductionTest, PlainExamples)
{
    EXPECT_EQ(red_plain(Word{5, 9, 7}), (Word{1, 3, 2}));
    EXPECT_EQ(red_plain(Word{1, 2, 3}), (Word{1, 2, 3}));
    EXPECT_EQ(red_plain(Word{8, 3}), (Word{2, 1}));
    EXPECT_THROW(red_plain(Word{2, -1}), InvalidWord);
}

TEST(ReductionTest, SignedExamples)
{
    EXPECT_EQ(red_signed(Word{4, -5, -2, 9}), (Word{2, -3, -1, 4}));
    EXPECT_EQ(red_signed(Word{-5, -3, 1, 8, -6, 7, 2}), (Word{-4, -3, 1, 7, -5, 6, 2}));
    EXPECT_EQ(red_signed(Word{1, -2}), (Word{1, -2}));
}

TEST(SignTest, NegateAndSmoothness)
{
    EXPECT_EQ(negate(Word{2, -1, 3}), (Word{-2, 1, -3}));
    EXPECT_EQ(negate(Word{1}), (Word{-1}));
    EXPECT_EQ(negate(Word{-4, 2}), (Word{4, -2}));
    EXPECT_TRUE(is_smooth(Word{-1, -2, 3}));
    EXPECT_FALSE(is_smooth(Word{4, -5, -3, 1, 8, -6, 7, 2}));
    EXPECT_TRUE(is_smooth(Word{1, 2}));
    EXPECT_THROW(is_smooth(Word{1}), InvalidWord);
}

TEST(FormatTest, ParseAndPrintRoundTrip)
{
    EXPECT_EQ(parse_word("-3, 4,-1"), (Word{-3, 4, -1}));
    EXPECT_EQ(to_string(Word{-3, 4, -1}), "(-3,4,-1)");
    EXPECT_THROW(parse_word("1,,2"), InvalidWord);
    EXPECT_THROW(parse_word("1,x"), InvalidWord);
    EXPECT_THROW(parse_word("1,-1"), InvalidWord);
    EXPECT_THROW(parse_word("1,0"), InvalidWord);
}

TEST(WordProperty, StatisticsAgreeWithDefinitionsOnAllSmallWords)
{
    std::size_t visited = 0;
    for_each_small_word([&](const Word& w) {
        ++visited;
        const std::vector<int>& v = w.vec();
        const int n = static_cast<int>(w.size());
        ASSERT_EQ(des(w), oracle::des_a(v));
        ASSERT_EQ(des_b(w), oracle::des_b(v));
        ASSERT_EQ(des_d(w), oracle::des_d(v));

        const Word r = red_signed(w);
        ASSERT_EQ(des_b(r), des_b(w));
        ASSERT_EQ(red_signed(r), r);
        for (std::size_t a = 0; a < w.size(); ++a) {
            ASSERT_EQ(r[a] < 0, w[a] < 0);
            ASSERT_LE(std::abs(r[a]), n);
            for (std::size_t b = 0; b < w.size(); ++b)
                ASSERT_EQ(r[a] < r[b], w[a] < w[b]);
        }

        ASSERT_EQ(des_b(w) + des_b(negate(w)), n);
        ASSERT_GE(des_b(w), 0);
        ASSERT_LE(des_b(w), n);
        if (n >= 1)
            ASSERT_LE(des(w), n - 1);
        if (n >= 2)
            ASSERT_LE(des_d(w), n);

        if (negative_count(w.entries()) == 0)
            ASSERT_EQ(des(red_plain(w)), des(w));
    });
    // sum over k of C(5,k) 2^k k!
    EXPECT_EQ(visited, 1u + 10u + 80u + 480u + 1920u + 3840u);
}
