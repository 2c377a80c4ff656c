#pragma once

// Words in window notation over ground sets of nonzero integers with
// pairwise-distinct absolute values, and the descent statistics of
// types A, B and D defined on them.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulerian {

/// Raised when a value violates the invariants of Word or GroundSet, or a
/// precondition of an operation on them.
class InvalidWord : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A sequence of nonzero integers whose absolute values are pairwise
/// distinct. Covers permutations, signed permutations and permutations of
/// arbitrary ground sets.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<int> entries);
    explicit Word(std::vector<int> entries);
    explicit Word(std::span<const int> entries);

    std::span<const int> entries() const noexcept { return entries_; }
    const std::vector<int>& vec() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int front() const { return entries_.front(); }
    int back() const { return entries_.back(); }

    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<int> entries_;
};

/// A finite set of nonzero integers with pairwise-distinct absolute values.
/// Elements are stored in ascending integer order.
class GroundSet {
public:
    GroundSet() = default;
    GroundSet(std::initializer_list<int> elements);
    explicit GroundSet(std::vector<int> elements);

    std::span<const int> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool contains(int x) const;

    /// Element with the smallest absolute value; throws on an empty set.
    int min_abs_element() const;

    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    friend bool operator==(const GroundSet&, const GroundSet&) = default;
    friend auto operator<=>(const GroundSet&, const GroundSet&) = default;

private:
    std::vector<int> elements_;
};

/// Checks the Word invariants on a raw sequence without constructing one.
bool is_valid_word(std::span<const int> entries) noexcept;

/// Ground set (the set of entries) of a word.
GroundSet ground_set_of(const Word& w);

// Descent statistics take raw spans so the enumeration hot paths never
// allocate; Word converts through entries().

/// Number of positions i with w_i > w_{i+1}.
inline int des(std::span<const int> w) noexcept
{
    int d = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        d += w[i] > w[i + 1];
    return d;
}

/// Type B descents: a virtual leading zero, so a negative first entry is a
/// descent at position 0.
inline int des_b(std::span<const int> w) noexcept
{
    if (w.empty())
        return 0;
    return (w[0] < 0) + des(w);
}

/// Type D descents: position 0 counts when w_1 + w_2 < 0. A length-1 word
/// has no position-0 descent.
inline int des_d(std::span<const int> w) noexcept
{
    if (w.size() < 2)
        return 0;
    return (w[0] + w[1] < 0) + des(w);
}

inline int des(const Word& w) noexcept { return des(w.entries()); }
inline int des_b(const Word& w) noexcept { return des_b(w.entries()); }
inline int des_d(const Word& w) noexcept { return des_d(w.entries()); }

inline int negative_count(std::span<const int> w) noexcept
{
    int c = 0;
    for (int x : w)
        c += x < 0;
    return c;
}

/// Order-isomorphic relabeling of a word over positive integers onto [n].
/// Throws InvalidWord when an entry is negative.
Word red_plain(const Word& w);

/// Signed reduction: the entry with the k-th smallest absolute value becomes
/// k or -k according to its sign.
Word red_signed(const Word& w);

/// Entrywise negation.
Word negate(const Word& w);

/// True iff the first two entries share a sign. Throws for length < 2.
bool is_smooth(const Word& w);

std::string to_string(const Word& w);

/// Parses "a,b,c" (optional spaces, leading minus for negatives).
/// Throws InvalidWord on malformed input or duplicate absolute values.
Word parse_word(const std::string& text);

}  // namespace eulerian
