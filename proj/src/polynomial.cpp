#include "eulerian/polynomial.hpp"

#include <algorithm>

namespace eulerian {

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs)
        coeffs_.emplace_back(c);
    canonicalize();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    canonicalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c)
{
    return IntPolynomial(std::vector<BigInt>{c});
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k)
{
    std::vector<BigInt> coeffs(k + 1);
    coeffs[k] = c;
    return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::canonicalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& q)
{
    if (q.coeffs_.size() > coeffs_.size())
        coeffs_.resize(q.coeffs_.size());
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k)
        coeffs_[k] += q.coeffs_[k];
    canonicalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& q)
{
    if (q.coeffs_.size() > coeffs_.size())
        coeffs_.resize(q.coeffs_.size());
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k)
        coeffs_[k] -= q.coeffs_[k];
    canonicalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& q)
{
    *this = *this * q;
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c)
{
    for (auto& x : coeffs_)
        x *= c;
    canonicalize();
    return *this;
}

void IntPolynomial::add_term(std::size_t k, const BigInt& c)
{
    if (k >= coeffs_.size())
        coeffs_.resize(k + 1);
    coeffs_[k] += c;
    canonicalize();
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q)
{
    if (p.is_zero() || q.is_zero())
        return {};
    std::vector<BigInt> out(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
            out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(IntPolynomial p)
{
    for (auto& x : p.coeffs_)
        x = -x;
    return p;
}

IntPolynomial scale(const IntPolynomial& p, const BigInt& c) { return p * c; }

IntPolynomial pow(const IntPolynomial& p, unsigned k)
{
    IntPolynomial result = IntPolynomial::constant(1);
    IntPolynomial base = p;
    while (k) {
        if (k & 1u)
            result *= base;
        k >>= 1;
        if (k)
            base *= base;
    }
    return result;
}

IntPolynomial substitute(const IntPolynomial& p, Substitution kind)
{
    const auto& c = p.coeffs();
    std::vector<BigInt> out;
    switch (kind) {
    case Substitution::neg_t:
        out = c;
        for (std::size_t k = 1; k < out.size(); k += 2)
            out[k] = -out[k];
        break;
    case Substitution::t_squared:
        if (!c.empty())
            out.resize(2 * c.size() - 1);
        for (std::size_t k = 0; k < c.size(); ++k)
            out[2 * k] = c[k];
        break;
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial reverse(const IntPolynomial& p, unsigned d)
{
    if (p.degree() > static_cast<int>(d))
        throw PolynomialError("reverse: degree " + std::to_string(p.degree()) + " exceeds " +
                              std::to_string(d));
    std::vector<BigInt> out(d + 1);
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k)
        out[d - k] = c[k];
    return IntPolynomial(std::move(out));
}

IntPolynomial even_part(const IntPolynomial& p)
{
    const auto& c = p.coeffs();
    std::vector<BigInt> out;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k % 2 == 0)
            out.push_back(c[k]);
        else if (c[k] != 0)
            throw PolynomialError("odd coefficient present");
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial exact_div_int(const IntPolynomial& p, const BigInt& c)
{
    if (c == 0)
        throw PolynomialError("division by zero");
    std::vector<BigInt> out = p.coeffs();
    for (auto& x : out) {
        if (x % c != 0)
            throw PolynomialError("inexact division");
        x /= c;
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial exact_div_t(const IntPolynomial& p)
{
    if (p.is_zero())
        return {};
    if (p.coeffs().front() != 0)
        throw PolynomialError("inexact division by t");
    return IntPolynomial(std::vector<BigInt>(p.coeffs().begin() + 1, p.coeffs().end()));
}

BigInt eval_int(const IntPolynomial& p, const BigInt& x)
{
    BigInt acc = 0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string to_string(const IntPolynomial& p)
{
    std::string s = "[";
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k)
            s += ", ";
        s += c[k].str();
    }
    return s + "]";
}

std::vector<std::string> to_decimal_strings(const IntPolynomial& p)
{
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        out.push_back(c.str());
    return out;
}

IntPolynomial from_decimal_strings(const std::vector<std::string>& coeffs)
{
    std::vector<BigInt> out;
    out.reserve(coeffs.size());
    for (const auto& s : coeffs) {
        std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start ||
            !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                         [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw PolynomialError("malformed coefficient '" + s + "'");
        out.emplace_back(s);
    }
    return IntPolynomial(std::move(out));
}

BigInt factorial(unsigned n)
{
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k)
        f *= k;
    return f;
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    BigInt b = 1;
    for (unsigned r = 1; r <= k; ++r) {
        b *= n - k + r;
        b /= r;
    }
    return b;
}

BigInt pow2(unsigned k) { return BigInt(1) << k; }

}  // namespace eulerian
