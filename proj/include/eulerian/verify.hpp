#pragma once

// Registry of polynomial identities and the harness that checks them by
// exact coefficient equality, either between two fast routes ("cheap") or
// against brute-force enumeration ("oracle").

#include "eulerian/polynomial.hpp"

#include <json.hpp>

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace eulerian {

enum class CostClass { cheap, oracle };

enum class Status { pass, fail, observed_disagreement };

std::string status_name(Status s);

struct ReportEntry {
    std::string identity;
    int n = 0;
    std::vector<std::pair<std::string, int>> indices;
    std::string label;
    IntPolynomial lhs;
    IntPolynomial rhs;
    Status status = Status::pass;
    std::string note;
    double millis = 0.0;
};

struct VerificationReport {
    std::vector<ReportEntry> entries;
    std::vector<std::pair<std::string, double>> identity_millis;

    std::size_t count(Status s) const;
    bool has_failures() const { return count(Status::fail) > 0; }
    void append(VerificationReport&& other);
};

/// Collects the entries produced while evaluating one identity at one n.
class EntrySink {
public:
    EntrySink(std::string identity, bool claim, int n) : identity_(std::move(identity)), claim_(claim), n_(n) {}

    /// Records lhs vs rhs. Status is PASS on equality, otherwise FAIL, or
    /// OBSERVED-DISAGREEMENT for a claim.
    void compare(std::vector<std::pair<std::string, int>> indices, std::string label, IntPolynomial lhs,
                 IntPolynomial rhs, std::string note = {});

    /// Records a comparison that also carries per-element structural checks
    /// (bijections): the entry fails when any check failed even if the
    /// generating polynomials agree.
    void compare_with_checks(std::vector<std::pair<std::string, int>> indices, std::string label,
                             IntPolynomial lhs, IntPolynomial rhs, std::size_t failed_checks, std::string note);

    /// Records an evaluation that threw.
    void error(std::vector<std::pair<std::string, int>> indices, std::string label, const std::string& what);

    std::vector<ReportEntry> take() { return std::move(entries_); }

private:
    std::string identity_;
    bool claim_;
    int n_;
    std::vector<ReportEntry> entries_;
};

struct IdentitySpec {
    std::string name;
    std::string statement;
    CostClass cost = CostClass::cheap;
    bool claim = false;
    int min_n = 1;
    std::function<void(int n, EntrySink&)> evaluate;
};

const std::vector<IdentitySpec>& registry();
const IdentitySpec* find_identity(const std::string& name);

/// Evaluates one identity for every n in [min_n, max_n]. Mismatches and
/// evaluation errors become report entries. Throws std::invalid_argument
/// for an unknown name or max_n below the identity's minimum.
VerificationReport run_identity(const std::string& name, int max_n);

/// Every registered identity, cheap ones up to cheap_max and oracle ones up
/// to oracle_max, in registry order. Identities whose minimum exceeds the
/// bound contribute nothing.
VerificationReport run_all(int cheap_max, int oracle_max);

/// Every fast path against enumeration: type A families up to max_n_a,
/// types B and D up to max_n_bd.
VerificationReport run_fast_path_sweep(int max_n_bd, int max_n_a);

/// {"entries": [...], "summary": {...}, "timing": {...}}. Everything except
/// "timing" is deterministic for a given registry and parameters.
nlohmann::ordered_json report_to_json(const VerificationReport& report);

/// The report without its "timing" member.
nlohmann::ordered_json report_payload(const nlohmann::ordered_json& report);

}  // namespace eulerian
