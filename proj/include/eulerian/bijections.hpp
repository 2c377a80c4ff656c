#pragma once

// Descent-preserving bijections between families of signed words, each with
// an explicit inverse.

#include "eulerian/enumerate.hpp"
#include "eulerian/word.hpp"

#include <vector>

namespace eulerian {

// ---- relabelings onto restricted permutations ---------------------------

/// True when X has |X| = n, contains 1..i, and every other absolute value in
/// (i, n] appears once with either sign.
bool satisfies_lemma21(const GroundSet& x, int i);

/// Relabels a word over X ending with i into a permutation of [n] ending
/// with i: 1..i fixed, the remaining positives ascending take i+1.., the
/// negatives ascending take the rest. des of the image equals des_B of w.
Word phi_lemma21(const GroundSet& x, const Word& w);
Word phi_lemma21_inverse(const GroundSet& x, const Word& sigma);

/// True when X covers absolute values [n] once each, contains i positively,
/// and has exactly j negatives of absolute value below i.
bool satisfies_lemma22(const GroundSet& x, int i, int j);

/// Image set X_{i-j} = {1..i-j, -i..-(i-j+1), elements above i unchanged}.
GroundSet lemma22_target(const GroundSet& x, int i);

/// Relabels a word over X ending with i onto X_{i-j}, sending the negatives
/// below i to -i.., the positives below i to 1.., and i to i-j. des_B is
/// preserved; j is the number of negatives below i in X.
Word phi_lemma22(const GroundSet& x, const Word& w);
/// Inverse given the source set X.
Word phi_lemma22_inverse(const GroundSet& x, const Word& v);

// ---- signed set partitions ------------------------------------------------

/// Cuts w after every right-to-left absolute minimum.
std::vector<Word> decompose_blocks(const Word& w);

/// w in B_n to its blocks; des_B(w) is the sum of des_B over the blocks.
SignedSetPartition phi_partition(const Word& w);

/// Concatenates blocks in increasing order of their smallest absolute
/// value. Throws InvalidWord when a block does not end at its minimum or the
/// blocks do not cover [n].
Word psi_partition(const SignedSetPartition& p);

// ---- type D half polynomials ---------------------------------------------

/// Smooth w (first two entries of equal sign): identity when the number of
/// negatives is even, otherwise the first entry is negated. Lands in D_n
/// with des_D(image) = des_B(w). Throws InvalidWord on non-smooth input.
Word phi_smooth(const Word& w);

/// Identity when the first two entries share a sign, otherwise negates the
/// first entry. Throws InvalidWord unless v has an even number of negatives.
Word phi_smooth_inverse(const Word& v);

struct NonsmoothImage {
    int u = 0;
    Word v;

    friend bool operator==(const NonsmoothImage&, const NonsmoothImage&) = default;
};

/// Non-smooth w in B_n: u = |w_1|, v is the signed reduction of w_2..w_n
/// with each letter x replaced by the letter of absolute value n - |x| and
/// opposite sign. v ends with the opposite sign to w. des_B(v) = des_B(w)
/// when w ends positive and des_B(w) - 1 when it ends negative.
NonsmoothImage phi_nonsmooth(const Word& w);

/// Undo the complement, reinsert absolute value u into the reduction, and
/// prepend +-u with the sign opposite to the second entry.
Word phi_nonsmooth_inverse(const NonsmoothImage& image);

/// Expected des_B(v) - des_B(w) for phi_nonsmooth by sign of the last entry.
int nonsmooth_descent_shift(Sign last_sign);

/// Entrywise negation B_{n,i} -> B_{n,-i}; des_B(w) + des_B(image) = n.
Word negation_map(const Word& w);

}  // namespace eulerian
