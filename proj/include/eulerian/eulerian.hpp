#pragma once

// Eulerian polynomials of types A, B and D and their restricted and half
// variants, computed two ways: by brute-force enumeration and by the
// identities and recurrences relating the families.

#include "eulerian/enumerate.hpp"
#include "eulerian/polynomial.hpp"
#include "eulerian/word.hpp"

#include <stdexcept>
#include <vector>

namespace eulerian {

/// Largest n the enumeration oracle accepts, per statistic type.
struct EnumerationCaps {
    int max_n_bd = 9;
    int max_n_a = 11;

    /// Defaults overridden by EULERIAN_ENUM_CAP_B / EULERIAN_ENUM_CAP_A.
    static EnumerationCaps from_environment();
};

class EnumerationCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sum of t^stat over one shard of the family, with des for type A kinds,
/// des_B for type B kinds and des_D for type D kinds. No cap check.
IntPolynomial descent_polynomial(const FamilySpec& spec, Shard shard = {});

/// Generating polynomial of the family's descent statistic by brute force.
/// With threads > 1 the stream is sharded and partial sums added.
/// Throws EnumerationCapExceeded when n is above the cap for the type.
IntPolynomial poly_by_enumeration(const FamilySpec& spec,
                                  const EnumerationCaps& caps = EnumerationCaps::from_environment(),
                                  unsigned threads = 1);

// ---- type A -------------------------------------------------------------

/// Eulerian triangle: A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1), A_0 = 1.
IntPolynomial a_fast(int n);

/// A_{n,j}: permutations of [n] ending with j, by a last-letter transfer
/// recurrence (drop the last entry, reduce, track whether the new last
/// entry exceeds j).
IntPolynomial a_restricted_transfer(int n, int j);

// ---- type B -------------------------------------------------------------

/// B_{n,j} for signed j, by the same transfer recurrence over signed words.
IntPolynomial b_restricted_transfer(int n, int j);

/// B_n^{+/-} and B_n as sums of b_restricted_transfer.
IntPolynomial b_half_transfer(int n, Sign sign);
IntPolynomial b_transfer(int n);

/// B_n extracted from 2 B_n(t^2) = (1+t)^{n+1} A_n(t) + (1-t)^{n+1} A_n(-t).
IntPolynomial b_from_a(int n);

/// B_n as the sum over multiplicity vectors m of
/// n!/prod(j!^{m_j} m_j!) (1+t)^{m_1} prod_i (2^{i+1} t A_i)^{m_{i+1}}.
IntPolynomial b_zhang(int n);

/// B_{n,i} = 2^{n-i} sum_j C(i-1, j) A_{n,i-j}, for 1 <= i <= n.
IntPolynomial brest_from_arest(int n, int i);

/// B_{n,-i} = t^n B_{n,i}(1/t), for 1 <= i <= n.
IntPolynomial brest_negative(int n, int i);

/// B_n^+ = sum_{j<n} C(n,j) B_j (t-1)^{n-j-1};  B_n^- = t^n B_n^+(1/t).
IntPolynomial bhalf_hyatt(int n, Sign sign);

/// Block weight of a set of positive integers: 1 + t for a singleton,
/// otherwise 2^|T| t A_{|T|-1}.
IntPolynomial block_weight(const std::vector<int>& t);

/// Case analysis for permutations of X ending with its minimal-absolute-
/// value element a. Throws std::invalid_argument unless a is strictly
/// minimal in absolute value.
IntPolynomial gf_rx(const GroundSet& x, int a);

// ---- type A from type B -------------------------------------------------

/// A_n from 2^n t A_n = B_n^- + t B_n^+.
IntPolynomial a_from_bhalf(int n);

/// A_n from the parity-split sums of C(n,j) B_j (t-1)^{n-j-1}.
IntPolynomial a_parity_formula(int n);

// ---- type D -------------------------------------------------------------

/// D_n = B_n - n 2^{n-1} t A_{n-1}; D_0 = 1.
IntPolynomial d_from_ba(int n);

/// D_n^+ = B_n^+ - n B_{n-1}^-,  D_n^- = B_n^- - n t B_{n-1}^+ for n >= 2.
/// n = 1 returns the base values D_1^+ = 1, D_1^- = 0.
IntPolynomial dhalf_from_bhalf(int n, Sign sign);

/// D_{n,1} = t (2^{n-1} A_{n-1} - (n-1) B_{n-2}) for n >= 2; D_{1,1} = 1.
IntPolynomial d1_closed(int n);

/// D_{n,1} = t D_{n-1}^+ + D_{n-1}^- for n >= 2.
IntPolynomial d1_from_halves(int n);

/// D_{n,i} for 1 <= i <= n from the ascending recurrence
/// D_{m,i} = D_{m,i-1} - (t-1) D_{m-1,i-1}, seeded by d1_closed.
IntPolynomial drest_table(int n, int i);

/// t^n D_{n,i}(1/t) for n >= 2, compared against D_{n,-i} as a checked
/// claim. D_{1,-1} is the seed value zero.
IntPolynomial drest_negative(int n, int i);

/// The closed form obtained by iterating the D recurrence, evaluated
/// literally with a uniform (i-1) factor on the middle sum, 2 <= i <= n.
/// Compared against drest_table as a checked claim.
IntPolynomial drest_iterated_display(int n, int i);

/// Identity-based route for any family; what `compute --method identity`
/// prints. Throws std::invalid_argument on an invalid spec.
IntPolynomial compute_by_identity(const FamilySpec& spec);

}  // namespace eulerian
