#include "eulerian/eulerian.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <thread>

namespace eulerian {

namespace {

// Read-mostly cache of fast-path results keyed by (operation, parameters).
// Values are computed outside the lock; concurrent misses may compute the
// same entry twice, and the first insert wins.
class Memo {
public:
    template <typename F>
    IntPolynomial get(const std::string& key, F&& compute)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end())
                return it->second;
        }
        IntPolynomial value = compute();
        std::unique_lock lock(mutex_);
        return table_.emplace(key, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::string, IntPolynomial> table_;
};

Memo& memo()
{
    static Memo m;
    return m;
}

std::string key(const char* op, int a, int b = 0)
{
    return std::string(op) + ":" + std::to_string(a) + ":" + std::to_string(b);
}

const IntPolynomial& one_plus_t()
{
    static const IntPolynomial p{1, 1};
    return p;
}

const IntPolynomial& t_minus_one()
{
    static const IntPolynomial p{-1, 1};
    return p;
}

const IntPolynomial& one_minus_t()
{
    static const IntPolynomial p{1, -1};
    return p;
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

int parse_env_int(const char* name, int fallback)
{
    const char* v = std::getenv(name);
    if (!v || !*v)
        return fallback;
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (*end != '\0' || parsed < 0)
        return fallback;
    return static_cast<int>(parsed);
}

}  // namespace

EnumerationCaps EnumerationCaps::from_environment()
{
    EnumerationCaps caps;
    caps.max_n_bd = parse_env_int("EULERIAN_ENUM_CAP_B", caps.max_n_bd);
    caps.max_n_a = parse_env_int("EULERIAN_ENUM_CAP_A", caps.max_n_a);
    return caps;
}

IntPolynomial descent_polynomial(const FamilySpec& spec, Shard shard)
{
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(spec.n) + 1, 0);
    switch (family_type(spec.kind)) {
    case 'A':
        for_each_word(spec, [&](std::span<const int> w) { ++counts[des(w)]; }, shard);
        break;
    case 'B':
        for_each_word(spec, [&](std::span<const int> w) { ++counts[des_b(w)]; }, shard);
        break;
    default:
        for_each_word(spec, [&](std::span<const int> w) { ++counts[des_d(w)]; }, shard);
        break;
    }
    std::vector<BigInt> coeffs(counts.begin(), counts.end());
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial poly_by_enumeration(const FamilySpec& spec, const EnumerationCaps& caps, unsigned threads)
{
    spec.validate();
    const int cap = family_type(spec.kind) == 'A' ? caps.max_n_a : caps.max_n_bd;
    if (spec.n > cap)
        throw EnumerationCapExceeded("enumeration cap exceeded: " + describe(spec) + " above n = " +
                                     std::to_string(cap));
    if (threads <= 1)
        return descent_polynomial(spec);

    std::vector<IntPolynomial> partial(threads);
    {
        std::vector<std::jthread> workers;
        for (unsigned k = 0; k < threads; ++k)
            workers.emplace_back([&, k] { partial[k] = descent_polynomial(spec, Shard{k, threads}); });
    }
    IntPolynomial total;
    for (const auto& p : partial)
        total += p;
    return total;
}

IntPolynomial a_fast(int n)
{
    require(n >= 0, "a_fast requires n >= 0");
    return memo().get(key("A", n), [n] {
        std::vector<BigInt> row{1};
        for (int m = 1; m <= n; ++m) {
            std::vector<BigInt> next(static_cast<std::size_t>(m), 0);
            for (int k = 0; k < m; ++k) {
                if (k < static_cast<int>(row.size()))
                    next[k] += BigInt(k + 1) * row[k];
                if (k >= 1 && k - 1 < static_cast<int>(row.size()))
                    next[k] += BigInt(m - k) * row[k - 1];
            }
            row = std::move(next);
        }
        return IntPolynomial(std::move(row));
    });
}

namespace {

// Row m of the type A transfer table: index j-1 holds A_{m,j}.
std::vector<IntPolynomial> a_transfer_row(int n)
{
    std::vector<IntPolynomial> row{IntPolynomial{1}};
    for (int m = 2; m <= n; ++m) {
        std::vector<IntPolynomial> next(static_cast<std::size_t>(m));
        for (int j = 1; j <= m; ++j) {
            IntPolynomial acc;
            for (int p = 1; p <= m - 1; ++p) {
                // The reduced prefix ends at p; the original entry exceeds j iff p >= j.
                const auto& prev = row[static_cast<std::size_t>(p - 1)];
                acc += p >= j ? prev * IntPolynomial::t() : prev;
            }
            next[static_cast<std::size_t>(j - 1)] = std::move(acc);
        }
        row = std::move(next);
    }
    return row;
}

// Index of a signed value in a row of size 2m: +1..+m then -1..-m.
std::size_t signed_index(int j, int m)
{
    return j > 0 ? static_cast<std::size_t>(j - 1) : static_cast<std::size_t>(m - j - 1);
}

std::vector<IntPolynomial> b_transfer_row(int n)
{
    std::vector<IntPolynomial> row{IntPolynomial{1}, IntPolynomial{0, 1}};
    for (int m = 2; m <= n; ++m) {
        std::vector<IntPolynomial> next(static_cast<std::size_t>(2 * m));
        for (int aj = 1; aj <= m; ++aj) {
            for (int j : {aj, -aj}) {
                IntPolynomial acc;
                for (int ap = 1; ap <= m - 1; ++ap) {
                    for (int p : {ap, -ap}) {
                        // Unreduce: absolute values at or above |j| shift up by one.
                        const int orig_abs = ap >= aj ? ap + 1 : ap;
                        const int orig = p > 0 ? orig_abs : -orig_abs;
                        const auto& prev = row[signed_index(p, m - 1)];
                        acc += orig > j ? prev * IntPolynomial::t() : prev;
                    }
                }
                next[signed_index(j, m)] = std::move(acc);
            }
        }
        row = std::move(next);
    }
    return row;
}

}  // namespace

IntPolynomial a_restricted_transfer(int n, int j)
{
    require(n >= 1 && j >= 1 && j <= n, "a_restricted_transfer requires 1 <= j <= n");
    return memo().get(key("Arest", n, j), [n, j] { return a_transfer_row(n)[static_cast<std::size_t>(j - 1)]; });
}

IntPolynomial b_restricted_transfer(int n, int j)
{
    require(n >= 1 && j != 0 && std::abs(j) <= n, "b_restricted_transfer requires 1 <= |j| <= n");
    return memo().get(key("Brest_transfer", n, j), [n, j] { return b_transfer_row(n)[signed_index(j, n)]; });
}

IntPolynomial b_half_transfer(int n, Sign sign)
{
    require(n >= 1, "b_half_transfer requires n >= 1");
    IntPolynomial acc;
    for (int a = 1; a <= n; ++a)
        acc += b_restricted_transfer(n, sign == Sign::plus ? a : -a);
    return acc;
}

IntPolynomial b_transfer(int n)
{
    require(n >= 0, "b_transfer requires n >= 0");
    if (n == 0)
        return IntPolynomial{1};
    return b_half_transfer(n, Sign::plus) + b_half_transfer(n, Sign::minus);
}

IntPolynomial b_from_a(int n)
{
    require(n >= 0, "b_from_a requires n >= 0");
    return memo().get(key("B", n), [n] {
        const IntPolynomial a = a_fast(n);
        const unsigned e = static_cast<unsigned>(n + 1);
        IntPolynomial rhs = pow(one_plus_t(), e) * a +
                            pow(one_minus_t(), e) * substitute(a, Substitution::neg_t);
        return exact_div_int(even_part(rhs), 2);
    });
}

IntPolynomial b_zhang(int n)
{
    require(n >= 1, "b_zhang requires n >= 1");
    return memo().get(key("Bzhang", n), [n] {
        // weights[i] = 2^{i+1} t A_i, the factor for a block of size i+1.
        std::vector<IntPolynomial> weights(static_cast<std::size_t>(n));
        for (int i = 1; i < n; ++i)
            weights[static_cast<std::size_t>(i)] = pow2(static_cast<unsigned>(i + 1)) * (IntPolynomial::t() * a_fast(i));
        IntPolynomial total;
        for (const auto& m : multiplicity_vectors(n)) {
            IntPolynomial term = IntPolynomial::constant(count_partitions_of_type(n, m));
            term *= pow(one_plus_t(), static_cast<unsigned>(m[0]));
            for (int i = 1; i < n; ++i)
                if (m[static_cast<std::size_t>(i)] > 0)
                    term *= pow(weights[static_cast<std::size_t>(i)], static_cast<unsigned>(m[static_cast<std::size_t>(i)]));
            total += term;
        }
        return total;
    });
}

IntPolynomial brest_from_arest(int n, int i)
{
    require(n >= 1 && i >= 1 && i <= n, "brest_from_arest requires 1 <= i <= n");
    return memo().get(key("Brest", n, i), [n, i] {
        IntPolynomial acc;
        for (int j = 0; j <= i - 1; ++j)
            acc += binomial(static_cast<unsigned>(i - 1), static_cast<unsigned>(j)) * a_restricted_transfer(n, i - j);
        return pow2(static_cast<unsigned>(n - i)) * acc;
    });
}

IntPolynomial brest_negative(int n, int i)
{
    return reverse(brest_from_arest(n, i), static_cast<unsigned>(n));
}

IntPolynomial bhalf_hyatt(int n, Sign sign)
{
    require(n >= 1, "bhalf_hyatt requires n >= 1");
    if (sign == Sign::minus)
        return reverse(bhalf_hyatt(n, Sign::plus), static_cast<unsigned>(n));
    return memo().get(key("Bplus", n), [n] {
        IntPolynomial acc;
        for (int j = 0; j <= n - 1; ++j)
            acc += binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) *
                   (b_from_a(j) * pow(t_minus_one(), static_cast<unsigned>(n - j - 1)));
        return acc;
    });
}

IntPolynomial block_weight(const std::vector<int>& t)
{
    require(!t.empty(), "block_weight requires a nonempty set");
    GroundSet check(t);
    for (int x : t)
        require(x > 0, "block_weight expects positive integers");
    if (t.size() == 1)
        return one_plus_t();
    const int k = static_cast<int>(t.size());
    return pow2(static_cast<unsigned>(k)) * (IntPolynomial::t() * a_fast(k - 1));
}

IntPolynomial gf_rx(const GroundSet& x, int a)
{
    require(x.contains(a), "gf_rx: a is not in X");
    for (int v : x)
        require(v == a || std::abs(v) > std::abs(a), "gf_rx: a must have the strictly smallest absolute value");
    if (x.size() == 1)
        return a > 0 ? IntPolynomial{1} : IntPolynomial{0, 1};
    return IntPolynomial::t() * a_fast(static_cast<int>(x.size()) - 1);
}

IntPolynomial a_from_bhalf(int n)
{
    require(n >= 1, "a_from_bhalf requires n >= 1");
    IntPolynomial sum = bhalf_hyatt(n, Sign::minus) + IntPolynomial::t() * bhalf_hyatt(n, Sign::plus);
    return exact_div_int(exact_div_t(sum), pow2(static_cast<unsigned>(n)));
}

IntPolynomial a_parity_formula(int n)
{
    require(n >= 1, "a_parity_formula requires n >= 1");
    IntPolynomial acc;
    // Only the j with n - j - 1 even survive; j runs over one parity class.
    for (int j = (n % 2 == 0) ? 1 : 0; j <= n - 1; j += 2)
        acc += binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) *
               (b_from_a(j) * pow(t_minus_one(), static_cast<unsigned>(n - j - 1)));
    return exact_div_int(acc, pow2(static_cast<unsigned>(n - 1)));
}

IntPolynomial d_from_ba(int n)
{
    require(n >= 0, "d_from_ba requires n >= 0");
    if (n == 0)
        return IntPolynomial{1};
    return memo().get(key("D", n), [n] {
        BigInt c = BigInt(n) * pow2(static_cast<unsigned>(n - 1));
        return b_from_a(n) - c * (IntPolynomial::t() * a_fast(n - 1));
    });
}

IntPolynomial dhalf_from_bhalf(int n, Sign sign)
{
    require(n >= 1, "dhalf_from_bhalf requires n >= 1");
    if (n == 1)
        return sign == Sign::plus ? IntPolynomial{1} : IntPolynomial{};
    return memo().get(key(sign == Sign::plus ? "Dplus" : "Dminus", n), [n, sign] {
        if (sign == Sign::plus)
            return bhalf_hyatt(n, Sign::plus) - BigInt(n) * bhalf_hyatt(n - 1, Sign::minus);
        return bhalf_hyatt(n, Sign::minus) - BigInt(n) * (IntPolynomial::t() * bhalf_hyatt(n - 1, Sign::plus));
    });
}

IntPolynomial d1_closed(int n)
{
    require(n >= 1, "d1_closed requires n >= 1");
    if (n == 1)
        return IntPolynomial{1};
    return memo().get(key("D1", n), [n] {
        IntPolynomial inner = pow2(static_cast<unsigned>(n - 1)) * a_fast(n - 1) - BigInt(n - 1) * b_from_a(n - 2);
        return IntPolynomial::t() * inner;
    });
}

IntPolynomial d1_from_halves(int n)
{
    require(n >= 2, "d1_from_halves requires n >= 2");
    return IntPolynomial::t() * dhalf_from_bhalf(n - 1, Sign::plus) + dhalf_from_bhalf(n - 1, Sign::minus);
}

IntPolynomial drest_table(int n, int i)
{
    require(n >= 1 && i >= 1 && i <= n, "drest_table requires 1 <= i <= n");
    if (i == 1)
        return d1_closed(n);
    return memo().get(key("Drest", n, i), [n, i] {
        return drest_table(n, i - 1) - t_minus_one() * drest_table(n - 1, i - 1);
    });
}

IntPolynomial drest_negative(int n, int i)
{
    require(n >= 1 && i >= 1 && i <= n, "drest_negative requires 1 <= i <= n");
    // (-1) has an odd number of negatives, so D_{1,-1} is empty; the
    // reflection of D_{1,1} = 1 would give t.
    if (n == 1)
        return {};
    return reverse(drest_table(n, i), static_cast<unsigned>(n));
}

IntPolynomial drest_iterated_display(int n, int i)
{
    require(i >= 2 && i <= n, "drest_iterated_display requires 2 <= i <= n");
    IntPolynomial middle;
    for (int r = 1; r <= i - 2; ++r)
        middle += pow(one_minus_t(), static_cast<unsigned>(r)) * d1_closed(n - r);
    return d1_closed(n) + BigInt(i - 1) * middle +
           pow(one_minus_t(), static_cast<unsigned>(i - 1)) * d1_closed(n - i + 1);
}

IntPolynomial compute_by_identity(const FamilySpec& spec)
{
    spec.validate();
    const int n = spec.n;
    switch (spec.kind) {
    case Family::A: return a_fast(n);
    case Family::B: return b_from_a(n);
    case Family::D: return d_from_ba(n);
    case Family::A_restricted: return a_restricted_transfer(n, *spec.last);
    case Family::B_restricted:
        return *spec.last > 0 ? brest_from_arest(n, *spec.last) : brest_negative(n, -*spec.last);
    case Family::D_restricted:
        return *spec.last > 0 ? drest_table(n, *spec.last) : drest_negative(n, -*spec.last);
    case Family::B_half: return bhalf_hyatt(n, *spec.sign);
    case Family::D_half: return dhalf_from_bhalf(n, *spec.sign);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace eulerian
