#pragma once

#include <cstdlib>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glab/cache_file.hpp"
#include "glab/identities.hpp"
#include "glab/numbers.hpp"
#include "glab/report.hpp"
#include "glab/sequences.hpp"
#include "glab/stirling.hpp"
#include "glab/valuation.hpp"

namespace glab::cli {

// Exit codes: 0 success / all-pass, 1 verification failure or internal
// consistency error, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline void emit(const Table& t, const std::string& format, std::ostream& out) {
    if (format == "csv") {
        auto line = [&](const std::vector<std::string>& row) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out << ',';
                out << report_io::csv_field(row[i]);
            }
            out << '\n';
        };
        line(t.header);
        for (const auto& r : t.rows) line(r);
    } else if (format == "jsonl") {
        for (const auto& r : t.rows) {
            nlohmann::ordered_json j;
            for (std::size_t i = 0; i < t.header.size(); ++i) j[t.header[i]] = r[i];
            out << j.dump() << '\n';
        }
    } else {
        std::vector<std::size_t> width(t.header.size());
        for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
        for (const auto& r : t.rows)
            for (std::size_t i = 0; i < r.size(); ++i)
                width[i] = std::max(width[i], r[i].size());
        auto line = [&](const std::vector<std::string>& row) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << row[i];
                if (i + 1 < row.size()) out << std::string(width[i] - row[i].size() + 2, ' ');
            }
            out << '\n';
        };
        line(t.header);
        for (const auto& r : t.rows) line(r);
    }
}

/// Deterministic value stream for `verify inversion`, independent of any
/// library distribution implementation.
inline std::vector<Integer> seeded_vector(std::uint64_t seed, long long n_max) {
    std::mt19937_64 rng(seed);
    std::vector<Integer> v;
    v.reserve(static_cast<std::size_t>(n_max + 1));
    for (long long i = 0; i <= n_max; ++i)
        v.push_back(Integer(static_cast<long long>(rng() % 2000001) - 1000000));
    return v;
}

inline int emit_report(const VerificationReport& rep, const std::string& format,
                       std::ostream& out) {
    if (format == "csv")
        report_io::write_csv(rep, out);
    else if (format == "jsonl")
        report_io::write_jsonl(rep, out);
    else
        report_io::write_plain(rep, out);
    return rep.all_pass ? kExitOk : kExitVerifyFail;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computation and verification of the a_n / Genocchi / "
                 "Stirling identity family"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "plain";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "jsonl"}))
        ->capture_default_str();

    // seq
    auto* seq = app.add_subcommand("seq", "Emit a sequence prefix");
    std::string seq_name;
    long long seq_n = 0;
    std::string seq_route;
    seq->add_option("name", seq_name, "Sequence: a, genocchi, bernoulli")
        ->required()
        ->check(CLI::IsMember({"a", "genocchi", "bernoulli"}));
    seq->add_option("n_max", seq_n, "Largest index")->required()->check(CLI::NonNegativeNumber);
    seq->add_option("--route", seq_route, "Genocchi route")
        ->check(CLI::IsMember({"stirling", "bernoulli", "seidel"}));

    // stirling
    auto* stir = app.add_subcommand("stirling", "Emit a Stirling triangle");
    std::string stir_kind;
    long long stir_n = 0;
    stir->add_option("kind", stir_kind, "first or second")
        ->required()
        ->check(CLI::IsMember({"first", "second"}));
    stir->add_option("n_max", stir_n, "Largest row")->required()->check(CLI::NonNegativeNumber);

    // verify
    auto* ver = app.add_subcommand("verify", "Run an identity verifier");
    std::string ver_id;
    long long ver_n = -1, ver_m = -1;
    std::uint64_t ver_seed = 1;
    ver->add_option("identity", ver_id, "Identity to verify")
        ->required()
        ->check(CLI::IsMember(
            {"rockett", "eqq5", "theorem1", "theorem2", "lcm", "orthogonality", "inversion"}));
    ver->add_option("--n-max", ver_n, "Largest n");
    ver->add_option("--m-max", ver_m, "Largest m (lcm identity)");
    ver->add_option("--seed", ver_seed, "Seed for the inversion test vector");

    // search-open1
    auto* so = app.add_subcommand("search-open1",
                                  "Scan for counterexamples to the p > 2 analogue");
    long long so_p = 0, so_n = 0;
    so->add_option("prime", so_p, "Odd prime");
    so->add_option("limit", so_n, "Scan limit");
    so->add_option("--p", so_p, "Odd prime (alternative to positional)");
    so->add_option("--n-max", so_n, "Scan limit (alternative to positional)");

    std::vector<const char*> argv;
    argv.push_back("glab");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    const char* cache_dir = std::getenv("GLAB_CACHE_DIR");
    if (cache_dir != nullptr) cache::load(cache_dir);

    int rc = kExitOk;
    try {
        if (*seq) {
            if (!seq_route.empty() && seq_name != "genocchi")
                throw CLI::ValidationError("--route is only valid with 'seq genocchi'");
            detail::Table t;
            if (seq_name == "a") {
                t.header = {"n", "value"};
                for (long long n = 0; n <= seq_n; ++n)
                    t.rows.push_back({std::to_string(n), to_string(a_direct(n))});
            } else if (seq_name == "bernoulli") {
                t.header = {"n", "value"};
                for (long long n = 0; n <= seq_n; ++n)
                    t.rows.push_back({std::to_string(n), to_string(bernoulli(n))});
            } else if (!seq_route.empty()) {
                GenocchiRoute route = seq_route == "stirling" ? GenocchiRoute::stirling_identity
                                      : seq_route == "bernoulli" ? GenocchiRoute::bernoulli_scaling
                                                                 : GenocchiRoute::seidel;
                t.header = {"n", "value"};
                for (long long n = 0; n <= seq_n; ++n)
                    t.rows.push_back({std::to_string(n), to_string(genocchi(n, route))});
            } else {
                t.header = {"n", "stirling", "bernoulli", "seidel", "agree"};
                bool all_agree = true;
                for (long long n = 0; n <= seq_n; ++n) {
                    Integer g1 = genocchi(n, GenocchiRoute::stirling_identity);
                    Integer g2 = genocchi(n, GenocchiRoute::bernoulli_scaling);
                    Integer g3 = genocchi(n, GenocchiRoute::seidel);
                    bool agree = g1 == g2 && g2 == g3;
                    all_agree = all_agree && agree;
                    t.rows.push_back({std::to_string(n), to_string(g1), to_string(g2),
                                      to_string(g3), agree ? "yes" : "no"});
                }
                if (!all_agree) rc = kExitVerifyFail;
            }
            detail::emit(t, format, out);
        } else if (*stir) {
            StirlingKind kind =
                stir_kind == "first" ? StirlingKind::first_signed : StirlingKind::second;
            auto& table = stirling_table(kind);
            if (format == "jsonl") {
                for (long long n = 0; n <= stir_n; ++n) {
                    nlohmann::ordered_json j;
                    j["n"] = n;
                    std::vector<std::string> vals;
                    for (const auto& v : table.row(n)) vals.push_back(to_string(v));
                    j["values"] = vals;
                    out << j.dump() << '\n';
                }
            } else if (format == "csv") {
                out << "n,k,value\n";
                for (long long n = 0; n <= stir_n; ++n) {
                    auto row = table.row(n);
                    for (long long k = 0; k <= n; ++k)
                        out << n << ',' << k << ',' << to_string(row[k]) << '\n';
                }
            } else {
                for (long long n = 0; n <= stir_n; ++n) {
                    out << n << ':';
                    for (const auto& v : table.row(n)) out << ' ' << to_string(v);
                    out << '\n';
                }
            }
        } else if (*ver) {
            auto need_n = [&](long long fallback) { return ver_n >= 0 ? ver_n : fallback; };
            VerificationReport rep;
            if (ver_id == "rockett")
                rep = verify_rockett(need_n(200));
            else if (ver_id == "eqq5")
                rep = verify_corollary_eqq5(need_n(100));
            else if (ver_id == "theorem1")
                rep = verify_theorem1(need_n(100));
            else if (ver_id == "theorem2")
                rep = verify_theorem2(need_n(2000));
            else if (ver_id == "lcm")
                rep = verify_lcm_identity(ver_m >= 0 ? ver_m : 500);
            else if (ver_id == "orthogonality")
                rep = check_orthogonality(need_n(60));
            else
                rep = verify_inversion(detail::seeded_vector(ver_seed, need_n(30)), need_n(30));
            rc = detail::emit_report(rep, format, out);
        } else if (*so) {
            if (so_p <= 0 || so_n <= 0)
                throw CLI::ValidationError("search-open1 needs an odd prime p and n_max >= 1");
            Prime p{Integer(so_p)};  // throws domain_error if composite
            if (p.value() == 2) throw CLI::ValidationError("search-open1: p must be odd");
            auto recs = search_open1(p, so_n);
            detail::Table t;
            t.header = {"n", "vp", "sp", "note"};
            for (const auto& r : recs)
                t.rows.push_back({std::to_string(r.n),
                                  r.valuation ? r.valuation->str() : std::string(),
                                  to_string(r.digit_sum),
                                  r.undefined ? "valuation-undefined" : ""});
            detail::emit(t, format, out);
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "internal consistency error: " << e.what() << '\n';
        return kExitVerifyFail;
    }

    if (cache_dir != nullptr) cache::save(cache_dir);
    return rc;
}

}  // namespace glab::cli
