#pragma once

// Dense univariate polynomials in t with unbounded integer coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulerian {

using BigInt = boost::multiprecision::cpp_int;

/// Raised by exact operations whose precondition fails on the data
/// (odd coefficient present, inexact division, degree too large).
class PolynomialError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Coefficient k is the coefficient of t^k. Always canonical: the last
/// stored coefficient is nonzero, and the zero polynomial stores nothing.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long long> coeffs);
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial constant(const BigInt& c);
    /// c * t^k
    static IntPolynomial monomial(const BigInt& c, std::size_t k);
    /// The polynomial t.
    static IntPolynomial t() { return monomial(1, 1); }

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of t^k, zero beyond the degree.
    BigInt coeff(std::size_t k) const;

    IntPolynomial& operator+=(const IntPolynomial& q);
    IntPolynomial& operator-=(const IntPolynomial& q);
    IntPolynomial& operator*=(const IntPolynomial& q);
    IntPolynomial& operator*=(const BigInt& c);

    /// Adds c * t^k in place; used by enumeration accumulators.
    void add_term(std::size_t k, const BigInt& c);

    friend IntPolynomial operator+(IntPolynomial p, const IntPolynomial& q) { return p += q; }
    friend IntPolynomial operator-(IntPolynomial p, const IntPolynomial& q) { return p -= q; }
    friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
    friend IntPolynomial operator*(IntPolynomial p, const BigInt& c) { return p *= c; }
    friend IntPolynomial operator*(const BigInt& c, IntPolynomial p) { return p *= c; }
    friend IntPolynomial operator-(IntPolynomial p);

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void canonicalize();

    std::vector<BigInt> coeffs_;
};

IntPolynomial scale(const IntPolynomial& p, const BigInt& c);

/// p^k with p^0 = 1.
IntPolynomial pow(const IntPolynomial& p, unsigned k);

enum class Substitution {
    neg_t,      // p(-t)
    t_squared,  // p(t^2)
};

IntPolynomial substitute(const IntPolynomial& p, Substitution kind);

/// t^d * p(1/t). Throws PolynomialError when degree(p) > d.
IntPolynomial reverse(const IntPolynomial& p, unsigned d);

/// q with q_k = p_{2k}. Throws PolynomialError("odd coefficient present")
/// if any odd-index coefficient is nonzero.
IntPolynomial even_part(const IntPolynomial& p);

/// Coefficientwise exact quotient. Throws PolynomialError("inexact
/// division") unless c divides every coefficient; c must be nonzero.
IntPolynomial exact_div_int(const IntPolynomial& p, const BigInt& c);

/// p / t, requiring a zero constant term.
IntPolynomial exact_div_t(const IntPolynomial& p);

BigInt eval_int(const IntPolynomial& p, const BigInt& x);

/// "[1, 6, 1]"; the zero polynomial prints as "[]".
std::string to_string(const IntPolynomial& p);

/// Decimal coefficient strings, ascending powers.
std::vector<std::string> to_decimal_strings(const IntPolynomial& p);

/// Inverse of to_decimal_strings; throws PolynomialError on a malformed
/// coefficient.
IntPolynomial from_decimal_strings(const std::vector<std::string>& coeffs);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt pow2(unsigned k);

}  // namespace eulerian
