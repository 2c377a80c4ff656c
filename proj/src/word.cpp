#include "eulerian/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace eulerian {

bool is_valid_word(std::span<const int> entries) noexcept
{
    std::vector<int> abs_values;
    abs_values.reserve(entries.size());
    for (int x : entries) {
        if (x == 0)
            return false;
        abs_values.push_back(std::abs(x));
    }
    std::sort(abs_values.begin(), abs_values.end());
    return std::adjacent_find(abs_values.begin(), abs_values.end()) == abs_values.end();
}

Word::Word(std::initializer_list<int> entries) : Word(std::vector<int>(entries)) {}

Word::Word(std::span<const int> entries) : Word(std::vector<int>(entries.begin(), entries.end())) {}

Word::Word(std::vector<int> entries) : entries_(std::move(entries))
{
    if (!is_valid_word(entries_))
        throw InvalidWord("word entries must be nonzero with distinct absolute values");
}

GroundSet::GroundSet(std::initializer_list<int> elements) : GroundSet(std::vector<int>(elements)) {}

GroundSet::GroundSet(std::vector<int> elements) : elements_(std::move(elements))
{
    if (!is_valid_word(elements_))
        throw InvalidWord("ground set elements must be nonzero with distinct absolute values");
    std::sort(elements_.begin(), elements_.end());
}

bool GroundSet::contains(int x) const
{
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

int GroundSet::min_abs_element() const
{
    if (elements_.empty())
        throw InvalidWord("empty ground set has no minimal element");
    return *std::min_element(elements_.begin(), elements_.end(),
                             [](int a, int b) { return std::abs(a) < std::abs(b); });
}

GroundSet ground_set_of(const Word& w) { return GroundSet(w.vec()); }

namespace {

// Rank (0-based) of each position when sorted by the given key.
template <typename Key>
std::vector<int> ranks_by(std::span<const int> w, Key key)
{
    std::vector<int> order(w.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(w[a]) < key(w[b]); });
    std::vector<int> rank(w.size());
    for (std::size_t r = 0; r < order.size(); ++r)
        rank[order[r]] = static_cast<int>(r);
    return rank;
}

}  // namespace

Word red_plain(const Word& w)
{
    if (negative_count(w.entries()) > 0)
        throw InvalidWord("plain reduction requires positive entries");
    auto rank = ranks_by(w.entries(), [](int x) { return x; });
    for (int& r : rank)
        ++r;
    return Word(std::move(rank));
}

Word red_signed(const Word& w)
{
    auto rank = ranks_by(w.entries(), [](int x) { return std::abs(x); });
    for (std::size_t i = 0; i < rank.size(); ++i)
        rank[i] = w[i] < 0 ? -(rank[i] + 1) : rank[i] + 1;
    return Word(std::move(rank));
}

Word negate(const Word& w)
{
    std::vector<int> out(w.begin(), w.end());
    for (int& x : out)
        x = -x;
    return Word(std::move(out));
}

bool is_smooth(const Word& w)
{
    if (w.size() < 2)
        throw InvalidWord("smoothness needs at least two entries");
    return (w[0] > 0) == (w[1] > 0);
}

std::string to_string(const Word& w)
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(w[i]);
    }
    return s + ")";
}

Word parse_word(const std::string& text)
{
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto first = item.find_first_not_of(" \t");
        auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw InvalidWord("empty entry in word '" + text + "'");
        item = item.substr(first, last - first + 1);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidWord("malformed entry '" + item + "'");
        }
        if (used != item.size())
            throw InvalidWord("malformed entry '" + item + "'");
        entries.push_back(value);
    }
    if (!is_valid_word(entries))
        throw InvalidWord("entries must be nonzero with distinct absolute values");
    return Word(std::move(entries));
}

}  // namespace eulerian
