#include "eulerian/cli.hpp"

#include "eulerian/bijections.hpp"
#include "eulerian/eulerian.hpp"
#include "eulerian/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace eulerian {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::optional<Sign> parse_sign(const std::string& text)
{
    if (text == "+" || text == "plus")
        return Sign::plus;
    if (text == "-" || text == "minus")
        return Sign::minus;
    return std::nullopt;
}

Family require_family(const std::string& name)
{
    auto f = parse_family(name);
    if (!f)
        throw UsageError("unknown family '" + name + "'");
    return *f;
}

FamilySpec make_spec(Family f, int n, std::optional<int> last, std::optional<Sign> sign)
{
    if (f == Family::A_restricted && last && *last < 0)
        throw UsageError("A_restricted does not accept a negative --last");
    FamilySpec spec{f, n, last, sign};
    spec.validate();
    return spec;
}

std::string method_name(bool enumerate) { return enumerate ? "enumerate" : "identity"; }

// ---- result cache ---------------------------------------------------------

std::string cache_key(const FamilySpec& spec, const std::string& method)
{
    std::string key = family_name(spec.kind) + "_n" + std::to_string(spec.n);
    if (spec.last)
        key += "_last" + std::to_string(*spec.last);
    if (spec.sign)
        key += *spec.sign == Sign::plus ? "_plus" : "_minus";
    return key + "_" + method;
}

std::optional<fs::path> cache_dir(const std::string& flag)
{
    if (!flag.empty())
        return fs::path(flag);
    if (const char* env = std::getenv("EULERIAN_CACHE_DIR"); env && *env)
        return fs::path(env);
    return std::nullopt;
}

std::optional<IntPolynomial> cache_read(const fs::path& file, const std::string& key)
{
    std::ifstream in(file);
    if (!in)
        return std::nullopt;
    try {
        auto j = nlohmann::json::parse(in);
        if (j.at("key").get<std::string>() != key)
            return std::nullopt;
        return from_decimal_strings(j.at("coeffs").get<std::vector<std::string>>());
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void cache_write(const fs::path& dir, const fs::path& file, const std::string& key, const IntPolynomial& p)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    ordered_json j;
    j["key"] = key;
    j["coeffs"] = to_decimal_strings(p);
    const fs::path tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            return;
        out << j.dump() << '\n';
    }
    fs::rename(tmp, file, ec);
}

struct ComputeOptions {
    bool enumerate = false;
    std::string cache;
    unsigned threads = 1;
};

IntPolynomial compute(const FamilySpec& spec, const ComputeOptions& opts)
{
    const std::string method = method_name(opts.enumerate);
    const auto dir = cache_dir(opts.cache);
    const std::string key = cache_key(spec, method);
    fs::path file;
    if (dir) {
        file = *dir / (key + ".json");
        if (auto hit = cache_read(file, key))
            return *hit;
    }
    IntPolynomial p = opts.enumerate
                          ? poly_by_enumeration(spec, EnumerationCaps::from_environment(), opts.threads)
                          : compute_by_identity(spec);
    if (dir)
        cache_write(*dir, file, key, p);
    return p;
}

ordered_json compute_object(const FamilySpec& spec, const std::string& method, const IntPolynomial& p)
{
    ordered_json j;
    j["family"] = family_name(spec.kind);
    j["n"] = spec.n;
    if (spec.last)
        j["last"] = *spec.last;
    if (spec.sign)
        j["sign"] = std::string(1, sign_char(*spec.sign));
    j["method"] = method;
    j["coeffs"] = to_decimal_strings(p);
    return j;
}

// ---- bijection helpers ------------------------------------------------------

std::string join_blocks(const std::vector<std::vector<int>>& blocks)
{
    std::string s;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (k)
            s += " | ";
        s += to_string(Word(blocks[k]));
    }
    return s;
}

std::string partition_stats(const Word& w, const std::vector<std::vector<int>>& blocks)
{
    std::string s = "des_B " + std::to_string(des_b(w)) + " = ";
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (k)
            s += '+';
        s += std::to_string(des_b(blocks[k]));
    }
    return s;
}

SignedSetPartition parse_partition(const std::string& text)
{
    SignedSetPartition p;
    std::stringstream ss(text);
    std::string block;
    while (std::getline(ss, block, '|'))
        p.blocks.push_back(parse_word(block).vec());
    return p;
}

std::string nonsmooth_text(const NonsmoothImage& img)
{
    std::string inner = to_string(img.v);
    return "(" + std::to_string(img.u) + " | " + inner.substr(1);
}

std::string nonsmooth_stats(const Word& w, const Word& v)
{
    std::string s = "des_B " + std::to_string(des_b(w)) + " = " + std::to_string(des_b(v));
    if (w.back() < 0)
        s += " + 1";
    return s;
}

struct BijectionOptions {
    std::string name;
    std::string input;
    std::string ground_set;
    bool inverse = false;
    std::optional<int> u;
};

GroundSet require_ground_set(const BijectionOptions& o)
{
    if (o.ground_set.empty())
        throw UsageError("--ground-set is required for " + o.name);
    return GroundSet(parse_word(o.ground_set).vec());
}

void run_bijection(const BijectionOptions& o, std::ostream& out)
{
    if (o.name == "partition") {
        if (o.inverse) {
            SignedSetPartition p = parse_partition(o.input);
            Word w = psi_partition(p);
            out << to_string(w) << '\n' << partition_stats(w, canonical(p).blocks) << '\n';
        } else {
            Word w = parse_word(o.input);
            SignedSetPartition p = phi_partition(w);
            out << join_blocks(p.blocks) << '\n' << partition_stats(w, p.blocks) << '\n';
        }
        return;
    }
    if (o.name == "nonsmooth") {
        if (o.inverse) {
            if (!o.u)
                throw UsageError("--u is required for the nonsmooth inverse");
            NonsmoothImage img{*o.u, parse_word(o.input)};
            Word w = phi_nonsmooth_inverse(img);
            out << to_string(w) << '\n' << nonsmooth_stats(w, img.v) << '\n';
        } else {
            Word w = parse_word(o.input);
            NonsmoothImage img = phi_nonsmooth(w);
            out << nonsmooth_text(img) << '\n' << nonsmooth_stats(w, img.v) << '\n';
        }
        return;
    }
    const Word in = parse_word(o.input);
    if (o.name == "lemma21") {
        const GroundSet x = require_ground_set(o);
        if (o.inverse) {
            Word w = phi_lemma21_inverse(x, in);
            out << to_string(w) << '\n' << "des_B " << des_b(w) << " = des " << des(in) << '\n';
        } else {
            Word img = phi_lemma21(x, in);
            out << to_string(img) << '\n' << "des_B " << des_b(in) << " = des " << des(img) << '\n';
        }
    } else if (o.name == "lemma22") {
        const GroundSet x = require_ground_set(o);
        Word img = o.inverse ? phi_lemma22_inverse(x, in) : phi_lemma22(x, in);
        out << to_string(img) << '\n' << "des_B " << des_b(in) << " = des_B " << des_b(img) << '\n';
    } else if (o.name == "smooth") {
        if (o.inverse) {
            Word w = phi_smooth_inverse(in);
            out << to_string(w) << '\n' << "des_B " << des_b(w) << " = des_D " << des_d(in) << '\n';
        } else {
            Word img = phi_smooth(in);
            out << to_string(img) << '\n' << "des_B " << des_b(in) << " = des_D " << des_d(img) << '\n';
        }
    } else if (o.name == "negation") {
        Word img = negation_map(in);
        out << to_string(img) << '\n'
            << "des_B " << des_b(in) << " + des_B " << des_b(img) << " = " << in.size() << '\n';
    } else {
        throw UsageError("unknown bijection '" + o.name + "'");
    }
}

// ---- table ----------------------------------------------------------------

std::vector<FamilySpec> table_specs(Family f, int n)
{
    std::vector<FamilySpec> specs;
    if (is_restricted(f)) {
        for (int last = -n; last <= n; ++last)
            if (last != 0 && (f != Family::A_restricted || last > 0))
                specs.push_back(FamilySpec::restricted(f, n, last));
    } else if (is_half(f)) {
        specs.push_back(FamilySpec::half(f, n, Sign::plus));
        specs.push_back(FamilySpec::half(f, n, Sign::minus));
    } else {
        specs.push_back(FamilySpec::plain(f, n));
    }
    return specs;
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            items.push_back(item);
    return items;
}

std::string join(const std::vector<std::string>& items, char sep)
{
    std::string s;
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (k)
            s += sep;
        s += items[k];
    }
    return s;
}

// Writes to the file at `path`, or to `out` when the path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open '" + path + "' for writing");
    file << text;
    if (!file)
        throw UsageError("failed writing '" + path + "'");
}

const char* kSignedHelp = "Signed integers use a leading minus; an overbarred letter such as 3̄ is written -3.";

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Eulerian polynomials of types A, B and D: compute, verify, biject, tabulate."};
    app.footer(kSignedHelp);
    app.require_subcommand(1);

    // compute
    auto* compute_cmd = app.add_subcommand("compute", "Print one descent generating polynomial.");
    std::string family;
    int n = 0;
    std::optional<int> last;
    std::string sign_text;
    std::string method = "identity";
    bool as_json = false;
    ComputeOptions copts;
    compute_cmd->add_option("--family", family, "A, B, D, A_restricted, B_restricted, D_restricted, B_half, D_half")
        ->required();
    compute_cmd->add_option("--n", n, "Length")->required();
    compute_cmd->add_option("--last", last, "Prescribed last entry (restricted families)");
    compute_cmd->add_option("--sign", sign_text, "Sign of the last entry (half families): + or -");
    compute_cmd->add_option("--method", method, "enumerate or identity")
        ->check(CLI::IsMember({"enumerate", "identity"}));
    compute_cmd->add_flag("--json", as_json, "Print a JSON object");
    compute_cmd->add_option("--cache", copts.cache, "Result cache directory (default $EULERIAN_CACHE_DIR)");
    compute_cmd->add_option("--threads", copts.threads, "Worker threads for enumeration")
        ->check(CLI::Range(1u, 256u));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check identities by exact polynomial equality.");
    std::string identity;
    bool all = false;
    bool list = false;
    std::optional<int> cheap_max, oracle_max, max_n;
    std::string out_path;
    auto* id_opt = verify_cmd->add_option("--identity", identity, "Registered identity name");
    auto* all_opt = verify_cmd->add_flag("--all", all, "Run the whole registry");
    auto* list_opt = verify_cmd->add_flag("--list", list, "List registered identities");
    id_opt->excludes(all_opt)->excludes(list_opt);
    all_opt->excludes(list_opt);
    verify_cmd->add_option("--cheap-max", cheap_max, "Largest n for identity-vs-identity checks (default 10)");
    verify_cmd->add_option("--oracle-max", oracle_max, "Largest n for checks against enumeration (default 6)");
    verify_cmd->add_option("--max-n", max_n, "Largest n for --identity, overriding the class bound");
    verify_cmd->add_option("--out", out_path, "Report file (default stdout)");

    // bijection
    auto* bij_cmd = app.add_subcommand("bijection", "Apply a bijection or its inverse to one word.");
    BijectionOptions bopts;
    bij_cmd->add_option("--name", bopts.name, "lemma21, lemma22, partition, smooth, nonsmooth, negation")
        ->required()
        ->check(CLI::IsMember({"lemma21", "lemma22", "partition", "smooth", "nonsmooth", "negation"}));
    bij_cmd->add_option("--input", bopts.input, "Comma-separated word; blocks separated by | for the partition inverse")
        ->required()
        ->allow_extra_args(false);
    bij_cmd->add_option("--ground-set", bopts.ground_set, "Comma-separated ground set (lemma21, lemma22)");
    bij_cmd->add_flag("--inverse", bopts.inverse, "Apply the inverse map");
    bij_cmd->add_option("--u", bopts.u, "First component of a nonsmooth image (nonsmooth inverse)");

    // table
    auto* table_cmd = app.add_subcommand("table", "Tabulate polynomials for n = 1..max-n.");
    int table_max = 0;
    std::string families_text;
    std::string format = "csv";
    std::string table_out;
    std::string table_method = "identity";
    ComputeOptions topts;
    table_cmd->add_option("--max-n", table_max, "Largest n")->required()->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--families", families_text, "Comma-separated family names")->required();
    table_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    table_cmd->add_option("--out", table_out, "Output file (default stdout)");
    table_cmd->add_option("--method", table_method, "enumerate or identity")
        ->check(CLI::IsMember({"enumerate", "identity"}));
    table_cmd->add_option("--cache", topts.cache, "Result cache directory (default $EULERIAN_CACHE_DIR)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*compute_cmd) {
            const Family f = require_family(family);
            std::optional<Sign> sign;
            if (!sign_text.empty()) {
                sign = parse_sign(sign_text);
                if (!sign)
                    throw UsageError("--sign must be + or -");
            }
            const FamilySpec spec = make_spec(f, n, last, sign);
            copts.enumerate = method == "enumerate";
            IntPolynomial p = compute(spec, copts);
            if (as_json)
                out << compute_object(spec, method, p).dump() << '\n';
            else
                out << to_string(p) << '\n';
            return exit_ok;
        }

        if (*verify_cmd) {
            if (list) {
                for (const auto& spec : registry())
                    out << spec.name << (spec.cost == CostClass::cheap ? "  [cheap" : "  [oracle")
                        << (spec.claim ? ", claim]  " : "]  ") << spec.statement << '\n';
                return exit_ok;
            }
            if (!all && identity.empty())
                throw UsageError("verify needs --identity NAME, --all or --list");
            VerificationReport report;
            if (all) {
                report = run_all(cheap_max.value_or(10), oracle_max.value_or(6));
            } else {
                const IdentitySpec* spec = find_identity(identity);
                if (!spec)
                    throw UsageError("unknown identity '" + identity + "'");
                const auto& own = spec->cost == CostClass::cheap ? cheap_max : oracle_max;
                const auto& other = spec->cost == CostClass::cheap ? oracle_max : cheap_max;
                const int bound = max_n ? *max_n
                                  : own ? *own
                                  : other ? *other
                                          : (spec->cost == CostClass::cheap ? 10 : 6);
                report = run_identity(identity, bound);
            }
            const std::string text = report_to_json(report).dump(2) + "\n";
            const std::string summary = std::to_string(report.entries.size()) + " entries: " +
                                        std::to_string(report.count(Status::pass)) + " PASS, " +
                                        std::to_string(report.count(Status::fail)) + " FAIL, " +
                                        std::to_string(report.count(Status::observed_disagreement)) +
                                        " OBSERVED-DISAGREEMENT";
            emit(out_path, text, out);
            (out_path.empty() ? err : out) << summary << '\n';
            for (const auto& e : report.entries)
                if (e.status == Status::fail)
                    err << "FAIL " << e.identity << " n=" << e.n << (e.label.empty() ? "" : " " + e.label)
                        << (e.note.empty() ? "" : ": " + e.note) << '\n';
            return report.has_failures() ? exit_verify_failed : exit_ok;
        }

        if (*bij_cmd) {
            run_bijection(bopts, out);
            return exit_ok;
        }

        if (*table_cmd) {
            std::vector<Family> families;
            for (const auto& name : split_list(families_text))
                families.push_back(require_family(name));
            if (families.empty())
                throw UsageError("--families is empty");
            std::sort(families.begin(), families.end(),
                      [](Family a, Family b) { return family_name(a) < family_name(b); });
            families.erase(std::unique(families.begin(), families.end()), families.end());
            topts.enumerate = table_method == "enumerate";

            std::ostringstream csv;
            csv << "family,n,last,sign,method,coeffs\n";
            ordered_json rows = ordered_json::array();
            for (Family f : families) {
                for (int k = 1; k <= table_max; ++k) {
                    for (const auto& spec : table_specs(f, k)) {
                        IntPolynomial p = compute(spec, topts);
                        if (format == "json") {
                            rows.push_back(compute_object(spec, table_method, p));
                        } else {
                            csv << family_name(f) << ',' << k << ','
                                << (spec.last ? std::to_string(*spec.last) : "") << ','
                                << (spec.sign ? std::string(1, sign_char(*spec.sign)) : "") << ','
                                << table_method << ',' << join(to_decimal_strings(p), ';') << '\n';
                        }
                    }
                }
            }
            emit(table_out, format == "json" ? rows.dump(2) + "\n" : csv.str(), out);
            return exit_ok;
        }
    } catch (const EnumerationCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_cap_exceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace eulerian
