#include "eulerian/bijections.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace eulerian;

TEST(Lemma21Test, Examples)
{
    const GroundSet x{1, 2, 3, 5, 8, -7, -6, -4};
    const Word w{-4, 2, 1, -7, -6, 5, 8, 3};
    const Word img = phi_lemma21(x, w);
    EXPECT_EQ(img, (Word{8, 2, 1, 6, 7, 4, 5, 3}));
    EXPECT_EQ(des(img), 4);
    EXPECT_EQ(des_b(w), 4);
    EXPECT_EQ(phi_lemma21_inverse(x, img), w);
    EXPECT_EQ(phi_lemma21(GroundSet{1, 2, 3}, Word{2, 1, 3}), (Word{2, 1, 3}));
    EXPECT_EQ(phi_lemma21(GroundSet{1, -2}, Word{-2, 1}), (Word{2, 1}));
}

TEST(Lemma21Test, RejectsBadInput)
{
    EXPECT_THROW(phi_lemma21(GroundSet{-1, 2}, Word{-1, 2}), InvalidWord);
    EXPECT_THROW(phi_lemma21(GroundSet{1, -2, 3}, Word{1, 3, -2}), InvalidWord);
    EXPECT_THROW(phi_lemma21(GroundSet{1, 2, 4}, Word{2, 4, 1}), InvalidWord);
    EXPECT_THROW(phi_lemma21(GroundSet{1, 2, 3}, Word{1, 3}), InvalidWord);
}

TEST(Lemma22Test, Examples)
{
    const GroundSet x{-1, 2, 3};
    EXPECT_EQ(phi_lemma22(x, Word{-1, 3, 2}), (Word{-2, 3, 1}));
    EXPECT_EQ(phi_lemma22(x, Word{3, -1, 2}), (Word{3, -2, 1}));
    EXPECT_EQ(des_b(Word{3, -1, 2}), des_b(Word{3, -2, 1}));
    EXPECT_EQ(phi_lemma22(GroundSet{1, 2, 3}, Word{3, 1, 2}), (Word{3, 1, 2}));
    EXPECT_EQ(lemma22_target(x, 2), (GroundSet{-2, 1, 3}));
    EXPECT_EQ(phi_lemma22_inverse(x, Word{-2, 3, 1}), (Word{-1, 3, 2}));
    EXPECT_THROW(phi_lemma22(GroundSet{1, -2, 3}, Word{1, 3, -2}), InvalidWord);
}

TEST(PartitionTest, Examples)
{
    const Word w{-3, 4, -1, 5, 9, -7, 2, -8, 6};
    const auto blocks = decompose_blocks(w);
    ASSERT_EQ(blocks.size(), 3u);
    EXPECT_EQ(blocks[0], (Word{-3, 4, -1}));
    EXPECT_EQ(blocks[1], (Word{5, 9, -7, 2}));
    EXPECT_EQ(blocks[2], (Word{-8, 6}));
    EXPECT_EQ(des_b(blocks[0]), 2);
    EXPECT_EQ(des_b(blocks[1]), 1);
    EXPECT_EQ(des_b(blocks[2]), 1);
    EXPECT_EQ(decompose_blocks(Word{1, 2, 3}), (std::vector<Word>{Word{1}, Word{2}, Word{3}}));
    EXPECT_EQ(decompose_blocks(Word{3, 2, 1}), (std::vector<Word>{Word{3, 2, 1}}));
    EXPECT_EQ(psi_partition({{{-1}}}), (Word{-1}));
    EXPECT_EQ(psi_partition(phi_partition(w)), w);
    EXPECT_THROW(psi_partition({{{1, 2}}}), InvalidWord);
}

TEST(SmoothTest, Examples)
{
    EXPECT_EQ(phi_smooth(Word{-1, -2, 3}), (Word{-1, -2, 3}));
    EXPECT_EQ(des_d(Word{-1, -2, 3}), 2);
    EXPECT_EQ(phi_smooth(Word{-1, -2, -3, 4}), (Word{1, -2, -3, 4}));
    EXPECT_EQ(des_b(Word{-1, -2, -3, 4}), 3);
    EXPECT_EQ(des_d(Word{1, -2, -3, 4}), 3);
    EXPECT_EQ(phi_smooth(Word{1, 2}), (Word{1, 2}));
    EXPECT_THROW(phi_smooth(Word{1, -2, 3}), InvalidWord);
    EXPECT_EQ(phi_smooth_inverse(Word{1, -2, -3, 4}), (Word{-1, -2, -3, 4}));
    EXPECT_THROW(phi_smooth_inverse(Word{1, -2, 3}), InvalidWord);
}

TEST(NonsmoothTest, Examples)
{
    const Word w{4, -5, -3, 1, 8, -6, 7, 2};
    const NonsmoothImage img = phi_nonsmooth(w);
    EXPECT_EQ(img.u, 4);
    EXPECT_EQ(img.v, (Word{4, 5, -7, -1, 3, -2, -6}));
    EXPECT_EQ(des_b(img.v), 3);
    EXPECT_EQ(des_b(w), 3);
    EXPECT_EQ(phi_nonsmooth_inverse(img), w);
    const NonsmoothImage small = phi_nonsmooth(Word{-2, 1});
    EXPECT_EQ(small.u, 2);
    EXPECT_EQ(small.v, (Word{-1}));
    EXPECT_THROW(phi_nonsmooth(Word{1, 2, 3}), InvalidWord);
    EXPECT_THROW(phi_nonsmooth_inverse({3, Word{1}}), InvalidWord);
}

TEST(NegationTest, Examples)
{
    EXPECT_EQ(negation_map(Word{2, -1, 3}), (Word{-2, 1, -3}));
    EXPECT_EQ(des_b(Word{2, -1, 3}), 1);
    EXPECT_EQ(des_b(Word{-2, 1, -3}), 2);
    EXPECT_EQ(negation_map(Word{1}), (Word{-1}));
}

TEST(BijectionProperty, PartitionIsDescentAdditiveAndInvertible)
{
    for (int n = 1; n <= 5; ++n) {
        std::set<SignedSetPartition> images;
        oracle::signed_perms(n, [&](const std::vector<int>& raw) {
            const Word w(raw);
            const SignedSetPartition p = phi_partition(w);
            int sum = 0;
            std::vector<int> concat;
            for (const auto& b : p.blocks) {
                sum += oracle::des_b(b);
                concat.insert(concat.end(), b.begin(), b.end());
            }
            ASSERT_EQ(concat, raw);
            ASSERT_EQ(sum, oracle::des_b(raw));
            ASSERT_TRUE(is_valid_signed_set_partition(p, n));
            ASSERT_EQ(psi_partition(p), w);
            images.insert(p);
        });
        std::size_t codomain = 0;
        for_each_signed_set_partition(n, [&](const SignedSetPartition& p) {
            ++codomain;
            ASSERT_TRUE(images.count(p));
        });
        EXPECT_EQ(images.size(), codomain);
    }
}

TEST(BijectionProperty, SmoothAndNonsmoothCoverTheirCodomains)
{
    for (int n = 2; n <= 5; ++n) {
        for (bool plus : {true, false}) {
            std::map<std::vector<int>, int> smooth_images;
            std::set<std::pair<int, std::vector<int>>> nonsmooth_images;
            oracle::signed_perms(n, [&](const std::vector<int>& raw) {
                if ((raw.back() > 0) != plus)
                    return;
                const Word w(raw);
                if (raw[0] * raw[1] > 0) {
                    const Word img = phi_smooth(w);
                    ASSERT_EQ(oracle::negatives(img.vec()) % 2, 0);
                    ASSERT_EQ(oracle::des_d(img.vec()), oracle::des_b(raw));
                    ASSERT_EQ(phi_smooth_inverse(img), w);
                    ASSERT_TRUE(smooth_images.emplace(img.vec(), 0).second);
                } else {
                    const NonsmoothImage img = phi_nonsmooth(w);
                    ASSERT_EQ(img.v.back() > 0, !plus);
                    ASSERT_EQ(oracle::des_b(img.v.vec()), oracle::des_b(raw) - (plus ? 0 : 1));
                    ASSERT_EQ(phi_nonsmooth_inverse(img), w);
                    ASSERT_TRUE(nonsmooth_images.emplace(img.u, img.v.vec()).second);
                }
            });
            std::size_t d_half = 0, b_half_opposite = 0;
            oracle::signed_perms(n, [&](const std::vector<int>& raw) {
                if ((raw.back() > 0) == plus && oracle::negatives(raw) % 2 == 0) {
                    ++d_half;
                    ASSERT_TRUE(smooth_images.count(raw));
                }
            });
            oracle::signed_perms(n - 1, [&](const std::vector<int>& raw) {
                if ((raw.back() > 0) != plus)
                    ++b_half_opposite;
            });
            EXPECT_EQ(smooth_images.size(), d_half);
            EXPECT_EQ(nonsmooth_images.size(), static_cast<std::size_t>(n) * b_half_opposite);
        }
    }
}

TEST(BijectionProperty, RelabelingsPreserveDescents)
{
    for (int n = 1; n <= 5; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 0; j < i; ++j)
                for (const auto& x : ground_sets_xij(n, i, j)) {
                    const GroundSet target = lemma22_target(x, i);
                    std::set<Word> seen;
                    for (const Word& w : perms_ending_with(x, i)) {
                        const Word v = phi_lemma22(x, w);
                        ASSERT_EQ(oracle::des_b(v.vec()), oracle::des_b(w.vec()));
                        ASSERT_EQ(ground_set_of(v), target);
                        ASSERT_EQ(phi_lemma22_inverse(x, v), w);
                        const Word sigma = phi_lemma21(target, v);
                        ASSERT_EQ(sigma.back(), i - j);
                        ASSERT_EQ(oracle::des_a(sigma.vec()), oracle::des_b(w.vec()));
                        ASSERT_EQ(phi_lemma21_inverse(target, sigma), v);
                        ASSERT_TRUE(seen.insert(sigma).second);
                    }
                }
}

TEST(BijectionProperty, NegationIsAnInvolutionComplementingDescents)
{
    for (int n = 1; n <= 5; ++n)
        oracle::signed_perms(n, [&](const std::vector<int>& raw) {
            const Word w(raw);
            const Word img = negation_map(w);
            ASSERT_EQ(negation_map(img), w);
            ASSERT_EQ(img.back(), -w.back());
            ASSERT_EQ(oracle::des_b(raw) + oracle::des_b(img.vec()), n);
        });
}
