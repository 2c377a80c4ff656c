#include "eulerian/bijections.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace eulerian {

namespace {

bool covers_abs_range(const GroundSet& x)
{
    const int n = static_cast<int>(x.size());
    return std::all_of(x.begin(), x.end(), [n](int v) { return std::abs(v) <= n; });
}

// Applies a letter map to every entry. Throws on letters outside the map.
Word relabel(const Word& w, const std::map<int, int>& phi)
{
    std::vector<int> out;
    out.reserve(w.size());
    for (int x : w) {
        auto it = phi.find(x);
        if (it == phi.end())
            throw InvalidWord("entry " + std::to_string(x) + " is outside the ground set");
        out.push_back(it->second);
    }
    return Word(std::move(out));
}

std::map<int, int> invert(const std::map<int, int>& phi)
{
    std::map<int, int> inv;
    for (auto [a, b] : phi)
        inv.emplace(b, a);
    return inv;
}

void require_word_over(const Word& w, const GroundSet& x)
{
    if (ground_set_of(w) != x)
        throw InvalidWord("word " + to_string(w) + " is not a permutation of the ground set");
}

void require_signed_permutation(const Word& w)
{
    const int n = static_cast<int>(w.size());
    for (int x : w)
        if (std::abs(x) > n)
            throw InvalidWord("word " + to_string(w) + " is not a signed permutation of [" + std::to_string(n) + "]");
}

std::map<int, int> lemma21_map(const GroundSet& x, int i)
{
    std::vector<int> order;
    for (int r = 1; r <= i; ++r)
        order.push_back(r);
    for (int v : x)
        if (v > i)
            order.push_back(v);
    for (int v : x)
        if (v < 0)
            order.push_back(v);
    std::map<int, int> phi;
    for (std::size_t r = 0; r < order.size(); ++r)
        phi.emplace(order[r], static_cast<int>(r) + 1);
    return phi;
}

int negatives_below(const GroundSet& x, int i)
{
    return static_cast<int>(std::count_if(x.begin(), x.end(), [i](int v) { return v < 0 && -v < i; }));
}

std::map<int, int> lemma22_map(const GroundSet& x, int i)
{
    std::vector<int> negatives, positives;
    for (int v : x) {
        if (v < 0 && -v < i)
            negatives.push_back(v);  // ascending: most negative first
        else if (v > 0 && v < i)
            positives.push_back(v);
    }
    const int j = static_cast<int>(negatives.size());
    std::map<int, int> phi;
    for (int r = 1; r <= j; ++r)
        phi.emplace(negatives[static_cast<std::size_t>(r - 1)], r - i - 1);
    for (int r = j + 1; r <= i - 1; ++r)
        phi.emplace(positives[static_cast<std::size_t>(r - j - 1)], r - j);
    phi.emplace(i, i - j);
    for (int v : x)
        if (std::abs(v) > i)
            phi.emplace(v, v);
    return phi;
}

}  // namespace

bool satisfies_lemma21(const GroundSet& x, int i)
{
    const int n = static_cast<int>(x.size());
    if (i < 1 || i > n || !covers_abs_range(x))
        return false;
    for (int r = 1; r <= i; ++r)
        if (!x.contains(r))
            return false;
    return true;
}

Word phi_lemma21(const GroundSet& x, const Word& w)
{
    if (w.empty())
        throw InvalidWord("lemma21 map needs a nonempty word");
    const int i = w.back();
    if (!satisfies_lemma21(x, i))
        throw InvalidWord("ground set does not satisfy the X_i conditions for i = " + std::to_string(i));
    require_word_over(w, x);
    return relabel(w, lemma21_map(x, i));
}

Word phi_lemma21_inverse(const GroundSet& x, const Word& sigma)
{
    if (sigma.empty())
        throw InvalidWord("lemma21 inverse needs a nonempty word");
    const int i = sigma.back();
    if (!satisfies_lemma21(x, i))
        throw InvalidWord("ground set does not satisfy the X_i conditions for i = " + std::to_string(i));
    std::vector<int> iota(x.size());
    for (std::size_t r = 0; r < iota.size(); ++r)
        iota[r] = static_cast<int>(r) + 1;
    require_word_over(sigma, GroundSet(iota));
    return relabel(sigma, invert(lemma21_map(x, i)));
}

bool satisfies_lemma22(const GroundSet& x, int i, int j)
{
    const int n = static_cast<int>(x.size());
    if (i < 1 || i > n || j < 0 || j >= i || !covers_abs_range(x) || !x.contains(i))
        return false;
    return negatives_below(x, i) == j;
}

GroundSet lemma22_target(const GroundSet& x, int i)
{
    if (!satisfies_lemma22(x, i, negatives_below(x, i)))
        throw InvalidWord("ground set does not satisfy the X_i^j conditions for i = " + std::to_string(i));
    std::vector<int> out;
    for (auto [from, to] : lemma22_map(x, i))
        out.push_back(to);
    return GroundSet(std::move(out));
}

Word phi_lemma22(const GroundSet& x, const Word& w)
{
    if (w.empty())
        throw InvalidWord("lemma22 map needs a nonempty word");
    const int i = w.back();
    if (!satisfies_lemma22(x, i, negatives_below(x, i)))
        throw InvalidWord("ground set does not satisfy the X_i^j conditions for i = " + std::to_string(i));
    require_word_over(w, x);
    return relabel(w, lemma22_map(x, i));
}

Word phi_lemma22_inverse(const GroundSet& x, const Word& v)
{
    if (v.empty())
        throw InvalidWord("lemma22 inverse needs a nonempty word");
    // The image ends with i - j; recover i from the source set.
    for (int i = 1; i <= static_cast<int>(x.size()); ++i) {
        if (!x.contains(i) || !satisfies_lemma22(x, i, negatives_below(x, i)))
            continue;
        if (i - negatives_below(x, i) != v.back())
            continue;
        auto phi = lemma22_map(x, i);
        std::vector<int> image;
        for (auto [from, to] : phi)
            image.push_back(to);
        if (ground_set_of(v) != GroundSet(image))
            continue;
        return relabel(v, invert(phi));
    }
    throw InvalidWord("word " + to_string(v) + " is not in the image of the lemma22 map for this ground set");
}

std::vector<Word> decompose_blocks(const Word& w)
{
    std::vector<char> cut(w.size(), 0);
    int min_abs = 0;
    for (std::size_t k = w.size(); k-- > 0;) {
        const int a = std::abs(w[k]);
        if (min_abs == 0 || a < min_abs) {
            cut[k] = 1;
            min_abs = a;
        }
    }
    std::vector<Word> blocks;
    std::vector<int> current;
    for (std::size_t k = 0; k < w.size(); ++k) {
        current.push_back(w[k]);
        if (cut[k]) {
            blocks.emplace_back(std::move(current));
            current.clear();
        }
    }
    return blocks;
}

SignedSetPartition phi_partition(const Word& w)
{
    require_signed_permutation(w);
    SignedSetPartition p;
    for (const auto& block : decompose_blocks(w))
        p.blocks.push_back(block.vec());
    return p;
}

Word psi_partition(const SignedSetPartition& p)
{
    int n = 0;
    for (const auto& b : p.blocks)
        n += static_cast<int>(b.size());
    if (!is_valid_signed_set_partition(p, n))
        throw InvalidWord("blocks must cover [n] and each end with its entry of smallest absolute value");
    std::vector<int> out;
    for (const auto& b : canonical(p).blocks)
        out.insert(out.end(), b.begin(), b.end());
    return Word(std::move(out));
}

Word phi_smooth(const Word& w)
{
    if (w.size() < 2 || !is_smooth(w))
        throw InvalidWord("input is not smooth");
    require_signed_permutation(w);
    if (negative_count(w.entries()) % 2 == 0)
        return w;
    std::vector<int> out = w.vec();
    out[0] = -out[0];
    return Word(std::move(out));
}

Word phi_smooth_inverse(const Word& v)
{
    if (v.size() < 2)
        throw InvalidWord("smooth inverse needs at least two entries");
    require_signed_permutation(v);
    if (negative_count(v.entries()) % 2 != 0)
        throw InvalidWord("input has an odd number of negative entries");
    if (is_smooth(v))
        return v;
    std::vector<int> out = v.vec();
    out[0] = -out[0];
    return Word(std::move(out));
}

NonsmoothImage phi_nonsmooth(const Word& w)
{
    if (w.size() < 2 || is_smooth(w))
        throw InvalidWord("input is smooth");
    require_signed_permutation(w);
    const int n = static_cast<int>(w.size());
    Word reduced = red_signed(Word(w.entries().subspan(1)));
    std::vector<int> v;
    v.reserve(reduced.size());
    for (int x : reduced)
        v.push_back(x > 0 ? -(n - x) : n + x);
    return {std::abs(w[0]), Word(std::move(v))};
}

Word phi_nonsmooth_inverse(const NonsmoothImage& image)
{
    const int n = static_cast<int>(image.v.size()) + 1;
    if (image.v.empty())
        throw InvalidWord("nonsmooth inverse needs a nonempty word");
    if (image.u < 1 || image.u > n)
        throw InvalidWord("u must lie in [1, " + std::to_string(n) + "]");
    require_signed_permutation(image.v);
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n));
    w.push_back(0);
    for (int x : image.v) {
        const int reduced_abs = n - std::abs(x);
        const int abs_value = reduced_abs >= image.u ? reduced_abs + 1 : reduced_abs;
        w.push_back(x > 0 ? -abs_value : abs_value);
    }
    w[0] = w[1] > 0 ? -image.u : image.u;
    return Word(std::move(w));
}

int nonsmooth_descent_shift(Sign last_sign) { return last_sign == Sign::plus ? 0 : -1; }

Word negation_map(const Word& w) { return negate(w); }

}  // namespace eulerian
