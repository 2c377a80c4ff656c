#include "eulerian/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace eulerian {

std::string family_name(Family f)
{
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::A_restricted: return "A_restricted";
    case Family::B_restricted: return "B_restricted";
    case Family::D_restricted: return "D_restricted";
    case Family::B_half: return "B_half";
    case Family::D_half: return "D_half";
    }
    return "?";
}

std::optional<Family> parse_family(const std::string& name)
{
    for (Family f : {Family::A, Family::B, Family::D, Family::A_restricted, Family::B_restricted,
                     Family::D_restricted, Family::B_half, Family::D_half})
        if (family_name(f) == name)
            return f;
    return std::nullopt;
}

bool is_restricted(Family f)
{
    return f == Family::A_restricted || f == Family::B_restricted || f == Family::D_restricted;
}

bool is_half(Family f) { return f == Family::B_half || f == Family::D_half; }

char family_type(Family f)
{
    switch (f) {
    case Family::A:
    case Family::A_restricted: return 'A';
    case Family::B:
    case Family::B_restricted:
    case Family::B_half: return 'B';
    default: return 'D';
    }
}

char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

FamilySpec FamilySpec::plain(Family kind, int n)
{
    FamilySpec s{kind, n, std::nullopt, std::nullopt};
    s.validate();
    return s;
}

FamilySpec FamilySpec::restricted(Family kind, int n, int last)
{
    FamilySpec s{kind, n, last, std::nullopt};
    s.validate();
    return s;
}

FamilySpec FamilySpec::half(Family kind, int n, Sign sign)
{
    FamilySpec s{kind, n, std::nullopt, sign};
    s.validate();
    return s;
}

void FamilySpec::validate() const
{
    if (n < 0)
        throw std::invalid_argument("n must be nonnegative");
    if (is_restricted(kind)) {
        if (!last)
            throw std::invalid_argument(family_name(kind) + " requires last");
        if (sign)
            throw std::invalid_argument(family_name(kind) + " takes no sign");
        if (n < 1)
            throw std::invalid_argument("restricted families need n >= 1");
        if (*last == 0 || std::abs(*last) > n)
            throw std::invalid_argument("last must satisfy 1 <= |last| <= n");
        if (kind == Family::A_restricted && *last < 1)
            throw std::invalid_argument("A_restricted requires last >= 1");
    } else if (is_half(kind)) {
        if (!sign)
            throw std::invalid_argument(family_name(kind) + " requires sign");
        if (last)
            throw std::invalid_argument(family_name(kind) + " takes no last");
        if (n < 1)
            throw std::invalid_argument("half families need n >= 1");
    } else if (last || sign) {
        throw std::invalid_argument(family_name(kind) + " takes no last or sign");
    }
}

std::string describe(const FamilySpec& spec)
{
    std::string s = family_name(spec.kind) + "(n=" + std::to_string(spec.n);
    if (spec.last)
        s += ", last=" + std::to_string(*spec.last);
    if (spec.sign)
        s += std::string(", sign=") + sign_char(*spec.sign);
    return s + ")";
}

bool Shard::accepts(std::span<const int> w) const noexcept
{
    if (count <= 1)
        return true;
    if (w.empty())
        return index == 0;
    unsigned key = static_cast<unsigned>(std::abs(w[0]) - 1) * 2u + (w[0] < 0 ? 1u : 0u);
    return key % count == index;
}

FamilyStream::FamilyStream(const FamilySpec& spec, Shard shard) : spec_(spec), shard_(shard)
{
    spec_.validate();
    if (shard_.count == 0 || shard_.index >= shard_.count)
        throw std::invalid_argument("invalid shard");
    for (int v = 1; v <= spec_.n; ++v)
        if (!spec_.last || v != std::abs(*spec_.last))
            free_abs_.push_back(v);

    const bool signed_kind = family_type(spec_.kind) != 'A';
    if (signed_kind) {
        signed_positions_ = free_abs_.size();
        if (is_half(spec_.kind))
            --signed_positions_;
    }
    if (signed_positions_ >= 63)
        throw std::invalid_argument("family too large to enumerate");
    mask_limit_ = std::uint64_t{1} << signed_positions_;
    word_.resize(static_cast<std::size_t>(spec_.n));
}

bool FamilyStream::build_and_accept()
{
    const std::size_t m = free_abs_.size();
    for (std::size_t k = 0; k < m; ++k) {
        int v = free_abs_[k];
        word_[k] = (k < signed_positions_ && ((mask_ >> k) & 1u)) ? -v : v;
    }
    if (is_half(spec_.kind) && *spec_.sign == Sign::minus)
        word_[m - 1] = -word_[m - 1];
    if (spec_.last)
        word_[m] = *spec_.last;
    if (family_type(spec_.kind) == 'D' && negative_count(word_) % 2 != 0)
        return false;
    return shard_.accepts(word_);
}

bool FamilyStream::next()
{
    while (!done_) {
        if (!started_) {
            started_ = true;
            mask_ = 0;
        } else if (++mask_ == mask_limit_) {
            mask_ = 0;
            if (!std::next_permutation(free_abs_.begin(), free_abs_.end())) {
                done_ = true;
                return false;
            }
        }
        if (shard_.count > 1 && !free_abs_.empty() && !shard_may_start_with(free_abs_[0])) {
            // No word with this first letter belongs to the shard: jump to the
            // last arrangement of the suffix so the next step changes it.
            std::sort(free_abs_.begin() + 1, free_abs_.end(), std::greater<int>());
            mask_ = mask_limit_ - 1;
            continue;
        }
        if (build_and_accept())
            return true;
    }
    return false;
}

bool FamilyStream::shard_may_start_with(int v) const
{
    const int first[] = {v, -v};
    const bool sign_free = signed_positions_ > 0;
    const bool forced_negative = !sign_free && is_half(spec_.kind) && *spec_.sign == Sign::minus &&
                                 free_abs_.size() == 1;
    for (int x : first) {
        if (x < 0 && !sign_free && !forced_negative)
            continue;
        if (x > 0 && forced_negative)
            continue;
        if (shard_.accepts(std::span<const int>(&x, 1)))
            return true;
    }
    return false;
}

std::uint64_t count_family(const FamilySpec& spec)
{
    std::uint64_t c = 0;
    for_each_word(spec, [&](std::span<const int>) { ++c; });
    return c;
}

ArrangementStream::ArrangementStream(const GroundSet& x, int last) : last_(last)
{
    if (!x.contains(last))
        throw InvalidWord("last entry " + std::to_string(last) + " is not in the ground set");
    for (int v : x)
        if (v != last)
            prefix_.push_back(v);
    word_.resize(x.size());
}

bool ArrangementStream::next()
{
    if (done_)
        return false;
    if (!started_) {
        started_ = true;
    } else if (!std::next_permutation(prefix_.begin(), prefix_.end())) {
        done_ = true;
        return false;
    }
    std::copy(prefix_.begin(), prefix_.end(), word_.begin());
    word_.back() = last_;
    return true;
}

std::vector<Word> perms_ending_with(const GroundSet& x, int a)
{
    std::vector<Word> out;
    ArrangementStream s(x, a);
    while (s.next())
        out.emplace_back(s.current());
    return out;
}

std::vector<GroundSet> ground_sets_xij(int n, int i, int j)
{
    if (i < 1 || i > n || j < 0 || j >= i)
        throw std::invalid_argument("ground_sets_xij requires 1 <= i <= n and 0 <= j < i");
    std::vector<GroundSet> out;
    // Which of 1..i-1 are negated: a j-subset, visited in lexicographic order.
    std::vector<char> negated(static_cast<std::size_t>(i - 1), 0);
    std::fill(negated.begin(), negated.begin() + j, 1);
    const int free = n - i;
    do {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free); ++mask) {
            std::vector<int> elems;
            elems.reserve(static_cast<std::size_t>(n));
            for (int r = 1; r < i; ++r)
                elems.push_back(negated[static_cast<std::size_t>(r - 1)] ? -r : r);
            elems.push_back(i);
            for (int r = i + 1; r <= n; ++r)
                elems.push_back(((mask >> (r - i - 1)) & 1u) ? -r : r);
            out.emplace_back(std::move(elems));
        }
    } while (std::prev_permutation(negated.begin(), negated.end()));
    return out;
}

std::vector<GroundSet> ground_sets_xi(int n, int i)
{
    if (i < 1 || i > n)
        throw std::invalid_argument("ground_sets_xi requires 1 <= i <= n");
    return ground_sets_xij(n, i, 0);
}

namespace {

void partitions_rec(int remaining, int part, MultiplicityVector& m, std::vector<MultiplicityVector>& out)
{
    if (remaining == 0) {
        out.push_back(m);
        return;
    }
    if (part > remaining)
        return;
    for (int count = remaining / part; count >= 0; --count) {
        m[static_cast<std::size_t>(part - 1)] = count;
        partitions_rec(remaining - count * part, part + 1, m, out);
    }
    m[static_cast<std::size_t>(part - 1)] = 0;
}

}  // namespace

std::vector<MultiplicityVector> multiplicity_vectors(int n)
{
    if (n < 1)
        throw std::invalid_argument("multiplicity_vectors requires n >= 1");
    std::vector<MultiplicityVector> out;
    MultiplicityVector m(static_cast<std::size_t>(n), 0);
    partitions_rec(n, 1, m, out);
    return out;
}

BigInt count_partitions_of_type(int n, const MultiplicityVector& m)
{
    if (n < 1 || m.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("multiplicity vector length must equal n");
    long total = 0;
    BigInt denom = 1;
    for (int j = 1; j <= n; ++j) {
        int mj = m[static_cast<std::size_t>(j - 1)];
        if (mj < 0)
            throw std::invalid_argument("negative multiplicity");
        total += static_cast<long>(j) * mj;
        BigInt jf = factorial(static_cast<unsigned>(j));
        for (int r = 0; r < mj; ++r)
            denom *= jf;
        denom *= factorial(static_cast<unsigned>(mj));
    }
    if (total != n)
        throw std::invalid_argument("multiplicities do not sum to n");
    BigInt num = factorial(static_cast<unsigned>(n));
    if (num % denom != 0)
        throw std::logic_error("partition-type count is not integral");
    return num / denom;
}

void for_each_set_partition(int n, const std::function<void(const std::vector<std::vector<int>>&)>& visit)
{
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int x) {
        if (x > n) {
            visit(blocks);
            return;
        }
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            blocks[k].push_back(x);
            rec(x + 1);
            blocks[k].pop_back();
        }
        blocks.push_back({x});
        rec(x + 1);
        blocks.pop_back();
    };
    rec(1);
}

bool is_valid_signed_set_partition(const SignedSetPartition& p, int n)
{
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& block : p.blocks) {
        if (block.empty())
            return false;
        const int last_abs = std::abs(block.back());
        for (int x : block) {
            int a = std::abs(x);
            if (x == 0 || a > n || seen[static_cast<std::size_t>(a)])
                return false;
            seen[static_cast<std::size_t>(a)] = 1;
            if (a < last_abs)
                return false;
        }
    }
    return std::all_of(seen.begin() + 1, seen.end(), [](char c) { return c != 0; });
}

SignedSetPartition canonical(SignedSetPartition p)
{
    std::sort(p.blocks.begin(), p.blocks.end(), [](const auto& a, const auto& b) {
        return std::abs(a.back()) < std::abs(b.back());
    });
    return p;
}

void for_each_signed_set_partition(int n, const std::function<void(const SignedSetPartition&)>& visit)
{
    for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
        // Every signed arrangement of each block that ends at its minimum.
        std::vector<std::vector<std::vector<int>>> options;
        for (const auto& block : blocks) {
            std::vector<std::vector<int>> arrangements;
            std::vector<int> rest(block.begin() + 1, block.end());
            do {
                const std::size_t k = block.size();
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
                    std::vector<int> seq(rest);
                    seq.push_back(block.front());
                    for (std::size_t p = 0; p < k; ++p)
                        if ((mask >> p) & 1u)
                            seq[p] = -seq[p];
                    arrangements.push_back(std::move(seq));
                }
            } while (std::next_permutation(rest.begin(), rest.end()));
            options.push_back(std::move(arrangements));
        }
        SignedSetPartition current;
        current.blocks.resize(blocks.size());
        std::function<void(std::size_t)> rec = [&](std::size_t b) {
            if (b == blocks.size()) {
                visit(current);
                return;
            }
            for (const auto& seq : options[b]) {
                current.blocks[b] = seq;
                rec(b + 1);
            }
        };
        rec(0);
    });
}

std::vector<GroundSet> signed_subsets(const std::vector<int>& t)
{
    for (int x : t)
        if (x <= 0)
            throw std::invalid_argument("signed_subsets expects positive integers");
    std::vector<GroundSet> out;
    const std::size_t k = t.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<int> elems(t);
        for (std::size_t p = 0; p < k; ++p)
            if ((mask >> p) & 1u)
                elems[p] = -elems[p];
        out.emplace_back(std::move(elems));
    }
    return out;
}

}  // namespace eulerian
