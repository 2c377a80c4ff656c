#pragma once

// Brute-force universes: (signed) permutation families, restricted and half
// subsets, the ground sets used by the restricted-polynomial lemmas,
// multiplicity vectors, and (signed) set partitions.

#include "eulerian/polynomial.hpp"
#include "eulerian/word.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eulerian {

enum class Family { A, B, D, A_restricted, B_restricted, D_restricted, B_half, D_half };

enum class Sign { plus, minus };

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);
bool is_restricted(Family f);
bool is_half(Family f);
/// 'A', 'B' or 'D': which descent statistic the family is counted by.
char family_type(Family f);

char sign_char(Sign s);

/// Selects one family of words. `last` is present exactly for restricted
/// kinds and `sign` exactly for half kinds.
struct FamilySpec {
    Family kind = Family::A;
    int n = 0;
    std::optional<int> last;
    std::optional<Sign> sign;

    static FamilySpec plain(Family kind, int n);
    static FamilySpec restricted(Family kind, int n, int last);
    static FamilySpec half(Family kind, int n, Sign sign);

    /// Throws std::invalid_argument on a parameter mismatch or range error.
    void validate() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string describe(const FamilySpec& spec);

/// Restricts a stream to the words whose first entry hashes to `index`
/// modulo `count`. The empty word belongs to shard 0.
struct Shard {
    unsigned index = 0;
    unsigned count = 1;

    bool accepts(std::span<const int> w) const noexcept;
};

/// Single-consumer, constant-memory stream over a family. Signed words are
/// produced as (permutation of absolute values, sign mask) pairs in
/// lexicographic order of the pair; D kinds filter on negative-entry parity.
class FamilyStream {
public:
    explicit FamilyStream(const FamilySpec& spec, Shard shard = {});

    /// Advances to the next member. Returns false once exhausted.
    bool next();
    std::span<const int> current() const noexcept { return word_; }

private:
    bool build_and_accept();
    bool shard_may_start_with(int v) const;

    FamilySpec spec_;
    Shard shard_;
    std::vector<int> free_abs_;  // absolute values permuted in the prefix
    std::vector<int> word_;
    std::uint64_t mask_ = 0;
    std::uint64_t mask_limit_ = 1;
    std::size_t signed_positions_ = 0;
    bool started_ = false;
    bool done_ = false;
};

template <typename F>
void for_each_word(const FamilySpec& spec, F&& visit, Shard shard = {})
{
    FamilyStream stream(spec, shard);
    while (stream.next())
        visit(stream.current());
}

std::uint64_t count_family(const FamilySpec& spec);

/// Every arrangement of X \ {a} followed by a, in lexicographic order of the
/// prefix. Throws InvalidWord when a is not in X.
class ArrangementStream {
public:
    ArrangementStream(const GroundSet& x, int last);

    bool next();
    std::span<const int> current() const noexcept { return word_; }

private:
    std::vector<int> prefix_;
    std::vector<int> word_;
    int last_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Word> perms_ending_with(const GroundSet& x, int a);

/// All X_i^j: contains i; for r < i exactly one of +-r with exactly j
/// negatives among them; for r > i exactly one of +-r, freely.
/// Requires 1 <= i <= n and 0 <= j < i.
std::vector<GroundSet> ground_sets_xij(int n, int i, int j);

/// The sets X_i: {1..i} positive, each r > i present with a free sign.
std::vector<GroundSet> ground_sets_xi(int n, int i);

using MultiplicityVector = std::vector<int>;  // m[0] is m_1

/// Each (m_1..m_n) with sum of j*m_j equal to n, exactly once.
std::vector<MultiplicityVector> multiplicity_vectors(int n);

/// n! / prod_j (j!^{m_j} m_j!), the number of set partitions of [n] of
/// type m. Throws std::invalid_argument when m is not a type for n.
BigInt count_partitions_of_type(int n, const MultiplicityVector& m);

/// Plain set partitions of [n], blocks ascending, blocks ordered by minimum.
void for_each_set_partition(int n, const std::function<void(const std::vector<std::vector<int>>&)>& visit);

/// A signed set partition of [n]: blocks are ordered sequences, each ending
/// with its entry of smallest absolute value. Canonically the blocks are
/// ordered by that smallest absolute value.
struct SignedSetPartition {
    std::vector<std::vector<int>> blocks;

    friend bool operator==(const SignedSetPartition&, const SignedSetPartition&) = default;
    friend auto operator<=>(const SignedSetPartition&, const SignedSetPartition&) = default;
};

/// Blocks cover +-[n] absolute values exactly once and each ends with its
/// minimal-absolute-value entry.
bool is_valid_signed_set_partition(const SignedSetPartition& p, int n);

/// Reorders blocks by their last entry's absolute value.
SignedSetPartition canonical(SignedSetPartition p);

void for_each_signed_set_partition(int n, const std::function<void(const SignedSetPartition&)>& visit);

/// All 2^|T| sign assignments of a set of positive integers.
std::vector<GroundSet> signed_subsets(const std::vector<int>& t);

}  // namespace eulerian
