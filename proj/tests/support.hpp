#pragma once

#include "eulerian/polynomial.hpp"
#include "oracle.hpp"

inline eulerian::IntPolynomial from_counts(const oracle::Counts& c)
{
    std::vector<eulerian::BigInt> coeffs(c.begin(), c.end());
    return eulerian::IntPolynomial(std::move(coeffs));
}
