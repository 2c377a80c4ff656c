#include "eulerian/verify.hpp"

#include "eulerian/bijections.hpp"
#include "eulerian/enumerate.hpp"
#include "eulerian/eulerian.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace eulerian {

std::string status_name(Status s)
{
    switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::observed_disagreement: return "OBSERVED-DISAGREEMENT";
    }
    return "?";
}

std::size_t VerificationReport::count(Status s) const
{
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [s](const ReportEntry& e) { return e.status == s; }));
}

void VerificationReport::append(VerificationReport&& other)
{
    entries.insert(entries.end(), std::make_move_iterator(other.entries.begin()),
                   std::make_move_iterator(other.entries.end()));
    identity_millis.insert(identity_millis.end(), other.identity_millis.begin(), other.identity_millis.end());
}

void EntrySink::compare(std::vector<std::pair<std::string, int>> indices, std::string label, IntPolynomial lhs,
                        IntPolynomial rhs, std::string note)
{
    ReportEntry e;
    e.identity = identity_;
    e.n = n_;
    e.indices = std::move(indices);
    e.label = std::move(label);
    e.status = lhs == rhs ? Status::pass : (claim_ ? Status::observed_disagreement : Status::fail);
    e.lhs = std::move(lhs);
    e.rhs = std::move(rhs);
    e.note = std::move(note);
    entries_.push_back(std::move(e));
}

void EntrySink::compare_with_checks(std::vector<std::pair<std::string, int>> indices, std::string label,
                                    IntPolynomial lhs, IntPolynomial rhs, std::size_t failed_checks,
                                    std::string note)
{
    compare(std::move(indices), std::move(label), std::move(lhs), std::move(rhs), std::move(note));
    if (failed_checks > 0)
        entries_.back().status = claim_ ? Status::observed_disagreement : Status::fail;
}

void EntrySink::error(std::vector<std::pair<std::string, int>> indices, std::string label, const std::string& what)
{
    ReportEntry e;
    e.identity = identity_;
    e.n = n_;
    e.indices = std::move(indices);
    e.label = std::move(label);
    e.status = claim_ ? Status::observed_disagreement : Status::fail;
    e.note = "error: " + what;
    entries_.push_back(std::move(e));
}

namespace {

using Indices = std::vector<std::pair<std::string, int>>;

const IntPolynomial kT = IntPolynomial::t();

// Enumeration results are shared across identities within a process.
IntPolynomial oracle(const FamilySpec& spec)
{
    static std::mutex mutex;
    static std::map<std::string, IntPolynomial> cache;
    const std::string key = describe(spec);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    IntPolynomial p = poly_by_enumeration(spec);
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(p)).first->second;
}

IntPolynomial enum_plain(Family f, int n) { return oracle(FamilySpec::plain(f, n)); }
IntPolynomial enum_restricted(Family f, int n, int last) { return oracle(FamilySpec::restricted(f, n, last)); }
IntPolynomial enum_half(Family f, int n, Sign s) { return oracle(FamilySpec::half(f, n, s)); }

int sign_index(Sign s) { return s == Sign::plus ? 1 : -1; }

std::string set_label(const GroundSet& x)
{
    std::string s = "X={";
    bool first = true;
    for (int v : x) {
        if (!first)
            s += ',';
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

// Runs one cell, turning exceptions into error entries.
template <typename F>
void guarded(EntrySink& sink, const Indices& indices, const std::string& label, F&& body)
{
    try {
        body();
    } catch (const std::exception& ex) {
        sink.error(indices, label, ex.what());
    }
}

IntPolynomial arrangement_gf(const GroundSet& x, int last)
{
    std::vector<std::uint64_t> counts(x.size() + 1, 0);
    ArrangementStream s(x, last);
    while (s.next())
        ++counts[static_cast<std::size_t>(des_b(s.current()))];
    return IntPolynomial(std::vector<BigInt>(counts.begin(), counts.end()));
}

// Per-element bookkeeping for a bijection sweep: generating polynomial of
// the images that passed every check, plus a failure count.
struct BijectionTally {
    IntPolynomial image_gf;
    std::set<std::vector<int>> images;
    std::size_t failures = 0;
    std::string first_failure;

    void record(bool ok, int image_stat, std::vector<int> key, const std::string& what)
    {
        if (ok && !images.insert(std::move(key)).second) {
            ok = false;
        }
        if (ok) {
            image_gf.add_term(static_cast<std::size_t>(image_stat), 1);
        } else {
            if (failures == 0)
                first_failure = what;
            ++failures;
        }
    }

    std::string note() const
    {
        if (failures == 0)
            return {};
        return std::to_string(failures) + " element(s) failed; first: " + first_failure;
    }
};

std::vector<int> encode_blocks(const SignedSetPartition& p)
{
    std::vector<int> key;
    for (const auto& b : p.blocks) {
        key.insert(key.end(), b.begin(), b.end());
        key.push_back(0);
    }
    return key;
}

void check_lemma21(int n, EntrySink& sink)
{
    IntPolynomial codomain;
    BijectionTally tally;
    for (int i = 1; i <= n; ++i) {
        for (const auto& x : ground_sets_xi(n, i)) {
            codomain += enum_restricted(Family::A_restricted, n, i);
            tally.images.clear();
            ArrangementStream s(x, i);
            while (s.next()) {
                Word w(s.current());
                Word img = phi_lemma21(x, w);
                bool ok = img.back() == i && red_plain(img) == img && des(img) == des_b(w) &&
                          phi_lemma21_inverse(x, img) == w;
                tally.record(ok, des(img), img.vec(), set_label(x) + " " + to_string(w));
            }
        }
    }
    sink.compare_with_checks({}, "lemma21", codomain, tally.image_gf, tally.failures, tally.note());
}

void check_lemma22(int n, EntrySink& sink)
{
    IntPolynomial codomain;
    BijectionTally tally;
    for (int i = 1; i <= n; ++i) {
        for (int j = 0; j < i; ++j) {
            for (const auto& x : ground_sets_xij(n, i, j)) {
                const GroundSet target = lemma22_target(x, i);
                codomain += arrangement_gf(target, i - j);
                tally.images.clear();
                ArrangementStream s(x, i);
                while (s.next()) {
                    Word w(s.current());
                    Word img = phi_lemma22(x, w);
                    bool ok = ground_set_of(img) == target && img.back() == i - j &&
                              satisfies_lemma21(target, i - j) && des_b(img) == des_b(w) &&
                              phi_lemma22_inverse(x, img) == w;
                    if (ok) {
                        // Composing with the lemma21 relabeling lands in S_{n,i-j}.
                        Word sigma = phi_lemma21(target, img);
                        ok = sigma.back() == i - j && red_plain(sigma) == sigma && des(sigma) == des_b(w);
                    }
                    tally.record(ok, des_b(img), img.vec(), set_label(x) + " " + to_string(w));
                }
            }
        }
    }
    sink.compare_with_checks({}, "lemma22", codomain, tally.image_gf, tally.failures, tally.note());
}

void check_partition(int n, EntrySink& sink)
{
    IntPolynomial codomain;
    for_each_signed_set_partition(n, [&](const SignedSetPartition& p) {
        int d = 0;
        for (const auto& b : p.blocks)
            d += des_b(b);
        codomain.add_term(static_cast<std::size_t>(d), 1);
    });
    BijectionTally tally;
    for_each_word(FamilySpec::plain(Family::B, n), [&](std::span<const int> raw) {
        Word w(raw);
        SignedSetPartition p = phi_partition(w);
        int block_sum = 0;
        for (const auto& b : p.blocks)
            block_sum += des_b(b);
        bool ok = is_valid_signed_set_partition(p, n) && canonical(p) == p && block_sum == des_b(w) &&
                  psi_partition(p) == w;
        tally.record(ok, block_sum, encode_blocks(p), to_string(w));
    });
    sink.compare_with_checks({}, "partition", codomain, tally.image_gf, tally.failures, tally.note());
}

void check_smooth(int n, Sign sign, EntrySink& sink)
{
    const IntPolynomial codomain = enum_half(Family::D_half, n, sign);
    BijectionTally tally;
    for_each_word(FamilySpec::half(Family::B_half, n, sign), [&](std::span<const int> raw) {
        Word w(raw);
        if (!is_smooth(w))
            return;
        Word img = phi_smooth(w);
        bool ok = negative_count(img.entries()) % 2 == 0 && (img.back() > 0) == (sign == Sign::plus) &&
                  des_d(img) == des_b(w) && phi_smooth_inverse(img) == w;
        tally.record(ok, des_d(img), img.vec(), to_string(w));
    });
    sink.compare_with_checks({{"sign", sign_index(sign)}}, "smooth", codomain, tally.image_gf, tally.failures,
                             tally.note());
}

void check_nonsmooth(int n, Sign sign, EntrySink& sink)
{
    const Sign opposite = sign == Sign::plus ? Sign::minus : Sign::plus;
    const IntPolynomial codomain = BigInt(n) * enum_half(Family::B_half, n - 1, opposite);
    const int shift = nonsmooth_descent_shift(sign);
    BijectionTally tally;
    for_each_word(FamilySpec::half(Family::B_half, n, sign), [&](std::span<const int> raw) {
        Word w(raw);
        if (is_smooth(w))
            return;
        NonsmoothImage img = phi_nonsmooth(w);
        const Word& v = img.v;
        bool ok = img.u >= 1 && img.u <= n && static_cast<int>(v.size()) == n - 1 &&
                  red_signed(v) == v && (v.back() > 0) == (opposite == Sign::plus) &&
                  des_b(v) == des_b(w) + shift && phi_nonsmooth_inverse(img) == w;
        std::vector<int> key{img.u};
        key.insert(key.end(), v.begin(), v.end());
        tally.record(ok, des_b(v), std::move(key), to_string(w));
    });
    sink.compare_with_checks({{"sign", sign_index(sign)}}, "nonsmooth", codomain, tally.image_gf, tally.failures,
                             tally.note());
}

void check_negation(int n, EntrySink& sink)
{
    const IntPolynomial codomain = enum_plain(Family::B, n);
    BijectionTally tally;
    for_each_word(FamilySpec::plain(Family::B, n), [&](std::span<const int> raw) {
        Word w(raw);
        Word img = negation_map(w);
        bool ok = img.back() == -w.back() && des_b(w) + des_b(img) == n && negation_map(img) == w;
        tally.record(ok, des_b(img), img.vec(), to_string(w));
    });
    sink.compare_with_checks({}, "negation", codomain, tally.image_gf, tally.failures, tally.note());
}

void bijection_roundtrips(int n, EntrySink& sink)
{
    guarded(sink, {}, "lemma21", [&] { check_lemma21(n, sink); });
    guarded(sink, {}, "lemma22", [&] { check_lemma22(n, sink); });
    guarded(sink, {}, "partition", [&] { check_partition(n, sink); });
    if (n >= 2) {
        for (Sign s : {Sign::plus, Sign::minus}) {
            guarded(sink, {{"sign", sign_index(s)}}, "smooth", [&] { check_smooth(n, s, sink); });
            guarded(sink, {{"sign", sign_index(s)}}, "nonsmooth", [&] { check_nonsmooth(n, s, sink); });
        }
    }
    guarded(sink, {}, "negation", [&] { check_negation(n, sink); });
}

// Fast paths against enumeration. Type A families run up to max_a, types B
// and D up to max_bd.
void fast_paths(int n, int max_bd, int max_a, EntrySink& sink)
{
    auto cell = [&](Indices idx, const std::string& label, auto&& lhs, auto&& rhs) {
        guarded(sink, idx, label, [&] { sink.compare(idx, label, lhs(), rhs()); });
    };
    if (n <= max_a) {
        cell({}, "A_fast", [&] { return enum_plain(Family::A, n); }, [&] { return a_fast(n); });
        cell({}, "A_from_Bhalf", [&] { return enum_plain(Family::A, n); }, [&] { return a_from_bhalf(n); });
        cell({}, "A_parity_formula", [&] { return enum_plain(Family::A, n); }, [&] { return a_parity_formula(n); });
        for (int j = 1; j <= n; ++j)
            cell({{"last", j}}, "A_restricted_transfer", [&] { return enum_restricted(Family::A_restricted, n, j); },
                 [&] { return a_restricted_transfer(n, j); });
    }
    if (n > max_bd)
        return;
    cell({}, "B_from_A", [&] { return enum_plain(Family::B, n); }, [&] { return b_from_a(n); });
    cell({}, "B_zhang", [&] { return enum_plain(Family::B, n); }, [&] { return b_zhang(n); });
    cell({}, "B_transfer", [&] { return enum_plain(Family::B, n); }, [&] { return b_transfer(n); });
    for (int i = 1; i <= n; ++i) {
        cell({{"last", i}}, "Brest_from_Arest", [&] { return enum_restricted(Family::B_restricted, n, i); },
             [&] { return brest_from_arest(n, i); });
        cell({{"last", -i}}, "Brest_negative", [&] { return enum_restricted(Family::B_restricted, n, -i); },
             [&] { return brest_negative(n, i); });
        for (int j : {i, -i})
            cell({{"last", j}}, "B_restricted_transfer", [&] { return enum_restricted(Family::B_restricted, n, j); },
                 [&] { return b_restricted_transfer(n, j); });
    }
    for (Sign s : {Sign::plus, Sign::minus}) {
        cell({{"sign", sign_index(s)}}, "Bhalf_hyatt", [&] { return enum_half(Family::B_half, n, s); },
             [&] { return bhalf_hyatt(n, s); });
        cell({{"sign", sign_index(s)}}, "Dhalf_from_Bhalf", [&] { return enum_half(Family::D_half, n, s); },
             [&] { return dhalf_from_bhalf(n, s); });
    }
    cell({}, "D_from_BA", [&] { return enum_plain(Family::D, n); }, [&] { return d_from_ba(n); });
    cell({}, "D1_closed", [&] { return enum_restricted(Family::D_restricted, n, 1); }, [&] { return d1_closed(n); });
    if (n >= 2)
        cell({}, "D1_from_halves", [&] { return enum_restricted(Family::D_restricted, n, 1); },
             [&] { return d1_from_halves(n); });
    for (int i = 1; i <= n; ++i) {
        cell({{"last", i}}, "Drest_table", [&] { return enum_restricted(Family::D_restricted, n, i); },
             [&] { return drest_table(n, i); });
        cell({{"last", -i}}, "Drest_negative", [&] { return enum_restricted(Family::D_restricted, n, -i); },
             [&] { return drest_negative(n, i); });
    }
    // Block weight of {1..n} against the double sum over signed subsets.
    std::vector<int> block(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        block[static_cast<std::size_t>(k)] = k + 1;
    cell({}, "block_weight",
         [&] {
             IntPolynomial sum;
             for (const auto& x : signed_subsets(block))
                 sum += arrangement_gf(x, x.min_abs_element());
             return sum;
         },
         [&] { return block_weight(block); });
}

// Every ground set of size n with absolute values drawn from [max(5, n)].
std::vector<GroundSet> ground_sets_of_size(int n)
{
    const int universe = std::max(5, n);
    std::vector<GroundSet> out;
    std::vector<char> chosen(static_cast<std::size_t>(universe), 0);
    std::fill(chosen.begin(), chosen.begin() + n, 1);
    do {
        std::vector<int> abs_values;
        for (int v = 1; v <= universe; ++v)
            if (chosen[static_cast<std::size_t>(v - 1)])
                abs_values.push_back(v);
        for (const auto& x : signed_subsets(abs_values))
            out.push_back(x);
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return out;
}

std::vector<IdentitySpec> build_registry()
{
    std::vector<IdentitySpec> r;

    r.push_back({"eq1_type_b_from_a", "2 B_n(t^2) = (1+t)^{n+1} A_n(t) + (1-t)^{n+1} A_n(-t)", CostClass::cheap,
                 false, 1, [](int n, EntrySink& sink) {
                     guarded(sink, {}, "", [&] {
                         IntPolynomial lhs = BigInt(2) * substitute(b_transfer(n), Substitution::t_squared);
                         const IntPolynomial a = a_fast(n);
                         const unsigned e = static_cast<unsigned>(n + 1);
                         IntPolynomial rhs = pow(IntPolynomial{1, 1}, e) * a +
                                             pow(IntPolynomial{1, -1}, e) * substitute(a, Substitution::neg_t);
                         sink.compare({}, "", lhs, rhs);
                     });
                 }});

    r.push_back({"eq2_stembridge", "D_n = B_n - n 2^{n-1} t A_{n-1}", CostClass::oracle, false, 2,
                 [](int n, EntrySink& sink) {
                     guarded(sink, {}, "", [&] { sink.compare({}, "", enum_plain(Family::D, n), d_from_ba(n)); });
                 }});

    r.push_back({"thm11_zhang", "B_n = sum over m of n!/prod(j!^{m_j} m_j!) (1+t)^{m_1} prod (2^{i+1} t A_i)^{m_{i+1}}",
                 CostClass::cheap, false, 1, [](int n, EntrySink& sink) {
                     guarded(sink, {}, "", [&] { sink.compare({}, "", b_from_a(n), b_zhang(n)); });
                 }});

    r.push_back({"thm12_restricted", "B_{n,i} = 2^{n-i} sum_j C(i-1,j) A_{n,i-j}", CostClass::cheap, false, 1,
                 [](int n, EntrySink& sink) {
                     for (int i = 1; i <= n; ++i)
                         guarded(sink, {{"i", i}}, "", [&] {
                             sink.compare({{"i", i}}, "", b_restricted_transfer(n, i), brest_from_arest(n, i));
                         });
                 }});

    r.push_back({"thm13_half", "B_n^+ = D_n^+ + n B_{n-1}^-,  B_n^- = D_n^- + n t B_{n-1}^+", CostClass::oracle,
                 false, 2, [](int n, EntrySink& sink) {
                     for (Sign s : {Sign::plus, Sign::minus}) {
                         Indices idx{{"sign", sign_index(s)}};
                         guarded(sink, idx, "", [&] {
                             IntPolynomial rhs = enum_half(Family::D_half, n, s);
                             if (s == Sign::plus)
                                 rhs += BigInt(n) * enum_half(Family::B_half, n - 1, Sign::minus);
                             else
                                 rhs += BigInt(n) * (kT * enum_half(Family::B_half, n - 1, Sign::plus));
                             sink.compare(idx, "", enum_half(Family::B_half, n, s), rhs);
                         });
                     }
                 }});

    r.push_back({"lem21_ground_sets", "sum over words of X_i ending with i of t^des_B = A_{n,i}", CostClass::oracle,
                 false, 1, [](int n, EntrySink& sink) {
                     for (int i = 1; i <= n; ++i) {
                         int k = 0;
                         for (const auto& x : ground_sets_xi(n, i)) {
                             Indices idx{{"i", i}, {"set", k++}};
                             guarded(sink, idx, set_label(x), [&] {
                                 sink.compare(idx, set_label(x), arrangement_gf(x, i), a_restricted_transfer(n, i));
                             });
                         }
                     }
                 }});

    r.push_back({"lem22_ground_sets", "sum over words of X_i^j ending with i of t^des_B = A_{n,i-j}",
                 CostClass::oracle, false, 1, [](int n, EntrySink& sink) {
                     for (int i = 1; i <= n; ++i)
                         for (int j = 0; j < i; ++j) {
                             int k = 0;
                             for (const auto& x : ground_sets_xij(n, i, j)) {
                                 Indices idx{{"i", i}, {"j", j}, {"set", k++}};
                                 guarded(sink, idx, set_label(x), [&] {
                                     sink.compare(idx, set_label(x), arrangement_gf(x, i),
                                                  a_restricted_transfer(n, i - j));
                                 });
                             }
                         }
                 }});

    r.push_back({"lem23_reflection_b", "B_{n,-i}(t) = t^n B_{n,i}(1/t)", CostClass::cheap, false, 1,
                 [](int n, EntrySink& sink) {
                     for (int i = 1; i <= n; ++i)
                         guarded(sink, {{"i", i}}, "", [&] {
                             sink.compare({{"i", i}}, "", b_restricted_transfer(n, -i), brest_negative(n, i));
                         });
                 }});

    r.push_back({"lem24_gf_rx", "words of X ending with its minimal-|.| element: 1, t, or t A_{k-1}",
                 CostClass::oracle, false, 1, [](int n, EntrySink& sink) {
                     int k = 0;
                     for (const auto& x : ground_sets_of_size(n)) {
                         Indices idx{{"set", k++}};
                         guarded(sink, idx, set_label(x), [&] {
                             const int a = x.min_abs_element();
                             sink.compare(idx, set_label(x), arrangement_gf(x, a), gf_rx(x, a));
                         });
                     }
                 }});

    r.push_back({"lem33_half_to_a", "2^n t A_n = B_n^- + t B_n^+", CostClass::cheap, false, 1,
                 [](int n, EntrySink& sink) {
                     guarded(sink, {}, "", [&] {
                         IntPolynomial lhs = pow2(static_cast<unsigned>(n)) * (kT * a_fast(n));
                         IntPolynomial rhs = b_half_transfer(n, Sign::minus) + kT * b_half_transfer(n, Sign::plus);
                         sink.compare({}, "", lhs, rhs);
                     });
                 }});

    r.push_back({"hyatt_expansions",
                 "B_n^+ = sum_j C(n,j) B_j (t-1)^{n-j-1},  B_n^- = t^n B_n^+(1/t) = t sum_j C(n,j) B_j (1-t)^{n-j-1}",
                 CostClass::cheap, false, 1, [](int n, EntrySink& sink) {
                     for (Sign s : {Sign::plus, Sign::minus}) {
                         Indices idx{{"sign", sign_index(s)}};
                         guarded(sink, idx, "", [&] {
                             sink.compare(idx, s == Sign::plus ? "sum" : "reflection", b_half_transfer(n, s),
                                          bhalf_hyatt(n, s));
                         });
                     }
                     Indices idx{{"sign", -1}};
                     guarded(sink, idx, "explicit", [&] {
                         IntPolynomial sum;
                         for (int j = 0; j <= n - 1; ++j)
                             sum += binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) *
                                    (b_from_a(j) * pow(IntPolynomial{1, -1}, static_cast<unsigned>(n - j - 1)));
                         sink.compare(idx, "explicit", b_half_transfer(n, Sign::minus), kT * sum);
                     });
                 }});

    r.push_back({"prop34_parity", "2^{n-1} A_n = sum over j = n-1 mod 2 of C(n,j) B_j (t-1)^{n-j-1}",
                 CostClass::cheap, false, 1, [](int n, EntrySink& sink) {
                     guarded(sink, {}, "", [&] { sink.compare({}, "", a_fast(n), a_parity_formula(n)); });
                 }});

    r.push_back({"lem35_d1_recurrence", "D_{n,1} = t D_{n-1}^+ + D_{n-1}^-", CostClass::oracle, false, 2,
                 [](int n, EntrySink& sink) {
                     guarded(sink, {}, "", [&] {
                         IntPolynomial rhs = kT * enum_half(Family::D_half, n - 1, Sign::plus) +
                                             enum_half(Family::D_half, n - 1, Sign::minus);
                         sink.compare({}, "", enum_restricted(Family::D_restricted, n, 1), rhs);
                     });
                 }});

    r.push_back({"thm36_d1_closed", "D_{n,1} = t (2^{n-1} A_{n-1} - (n-1) B_{n-2})", CostClass::oracle, false, 2,
                 [](int n, EntrySink& sink) {
                     guarded(sink, {}, "", [&] {
                         sink.compare({}, "", enum_restricted(Family::D_restricted, n, 1), d1_closed(n));
                     });
                 }});

    r.push_back({"prop37_d_recurrence", "D_{n,i} = D_{n,i+1} + (t-1) D_{n-1,i}", CostClass::oracle, false, 2,
                 [](int n, EntrySink& sink) {
                     for (int i = 1; i <= n - 1; ++i)
                         guarded(sink, {{"i", i}}, "", [&] {
                             IntPolynomial rhs = enum_restricted(Family::D_restricted, n, i + 1) +
                                                 IntPolynomial{-1, 1} * enum_restricted(Family::D_restricted, n - 1, i);
                             sink.compare({{"i", i}}, "", enum_restricted(Family::D_restricted, n, i), rhs);
                         });
                 }});

    r.push_back({"d_iterated_display",
                 "D_{n,i} = D_{n,1} + (i-1) sum_{r=1}^{i-2} (1-t)^r D_{n-r,1} + (1-t)^{i-1} D_{n-i+1,1}",
                 CostClass::cheap, true, 2, [](int n, EntrySink& sink) {
                     for (int i = 2; i <= n; ++i)
                         guarded(sink, {{"i", i}}, "", [&] {
                             sink.compare({{"i", i}}, "", drest_table(n, i), drest_iterated_display(n, i));
                         });
                 }});

    r.push_back({"d_reflection_conjecture", "D_{n,-i}(t) = t^n D_{n,i}(1/t)", CostClass::oracle, true, 1,
                 [](int n, EntrySink& sink) {
                     for (int i = 1; i <= n; ++i)
                         guarded(sink, {{"i", i}}, "", [&] {
                             std::string note;
                             if (n == 1)
                                 note = "n = 1 compares the seed D_{1,-1} = 0; t^1 D_{1,1}(1/t) = t";
                             sink.compare({{"i", i}}, "", enum_restricted(Family::D_restricted, n, -i),
                                          drest_negative(n, i), note);
                         });
                 }});

    r.push_back({"bijection_roundtrips", "descent-preserving bijections: exhaustive round trips and coverage",
                 CostClass::oracle, false, 1, bijection_roundtrips});

    r.push_back({"fast_paths_vs_enumeration", "every fast path equals brute-force enumeration", CostClass::oracle,
                 false, 1, [](int n, EntrySink& sink) { fast_paths(n, n, n, sink); }});

    return r;
}

VerificationReport run_spec(const IdentitySpec& spec, int max_n,
                            const std::function<void(int, EntrySink&)>& evaluate)
{
    using clock = std::chrono::steady_clock;
    VerificationReport report;
    const auto start = clock::now();
    for (int n = spec.min_n; n <= max_n; ++n) {
        EntrySink sink(spec.name, spec.claim, n);
        const auto cell_start = clock::now();
        try {
            evaluate(n, sink);
        } catch (const std::exception& ex) {
            sink.error({}, "", ex.what());
        }
        auto entries = sink.take();
        const double ms = std::chrono::duration<double, std::milli>(clock::now() - cell_start).count();
        for (auto& e : entries) {
            e.millis = entries.empty() ? 0.0 : ms / static_cast<double>(entries.size());
            report.entries.push_back(std::move(e));
        }
    }
    report.identity_millis.emplace_back(
        spec.name, std::chrono::duration<double, std::milli>(clock::now() - start).count());
    return report;
}

}  // namespace

const std::vector<IdentitySpec>& registry()
{
    static const std::vector<IdentitySpec> r = build_registry();
    return r;
}

const IdentitySpec* find_identity(const std::string& name)
{
    for (const auto& spec : registry())
        if (spec.name == name)
            return &spec;
    return nullptr;
}

VerificationReport run_identity(const std::string& name, int max_n)
{
    const IdentitySpec* spec = find_identity(name);
    if (!spec)
        throw std::invalid_argument("unknown identity '" + name + "'");
    if (max_n < spec->min_n)
        throw std::invalid_argument("identity '" + name + "' needs max n >= " + std::to_string(spec->min_n));
    return run_spec(*spec, max_n, spec->evaluate);
}

VerificationReport run_all(int cheap_max, int oracle_max)
{
    VerificationReport report;
    for (const auto& spec : registry()) {
        const int max_n = spec.cost == CostClass::cheap ? cheap_max : oracle_max;
        if (max_n < spec.min_n)
            continue;
        report.append(run_spec(spec, max_n, spec.evaluate));
    }
    return report;
}

VerificationReport run_fast_path_sweep(int max_n_bd, int max_n_a)
{
    const IdentitySpec* spec = find_identity("fast_paths_vs_enumeration");
    return run_spec(*spec, std::max(max_n_bd, max_n_a),
                    [=](int n, EntrySink& sink) { fast_paths(n, max_n_bd, max_n_a, sink); });
}

nlohmann::ordered_json report_to_json(const VerificationReport& report)
{
    using nlohmann::ordered_json;
    ordered_json entries = ordered_json::array();
    ordered_json entry_millis = ordered_json::array();
    for (const auto& e : report.entries) {
        ordered_json j;
        j["identity"] = e.identity;
        j["n"] = e.n;
        ordered_json idx = ordered_json::object();
        for (const auto& [k, v] : e.indices)
            idx[k] = v;
        j["indices"] = idx;
        if (!e.label.empty())
            j["label"] = e.label;
        j["lhs"] = to_decimal_strings(e.lhs);
        j["rhs"] = to_decimal_strings(e.rhs);
        j["status"] = status_name(e.status);
        if (!e.note.empty())
            j["note"] = e.note;
        entries.push_back(std::move(j));
        entry_millis.push_back(e.millis);
    }
    ordered_json out;
    out["entries"] = std::move(entries);
    out["summary"] = {{"entries", report.entries.size()},
                      {"pass", report.count(Status::pass)},
                      {"fail", report.count(Status::fail)},
                      {"observed_disagreement", report.count(Status::observed_disagreement)}};
    ordered_json per_identity = ordered_json::object();
    for (const auto& [name, ms] : report.identity_millis)
        per_identity[name] = ms;
    out["timing"] = {{"identity_millis", std::move(per_identity)}, {"entry_millis", std::move(entry_millis)}};
    return out;
}

nlohmann::ordered_json report_payload(const nlohmann::ordered_json& report)
{
    nlohmann::ordered_json payload = report;
    payload.erase("timing");
    return payload;
}

}  // namespace eulerian
