#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "glab/numbers.hpp"

namespace glab {

/// One per-n entry of a verification run. lhs/rhs are exact decimal or
/// fraction strings; bounds and slack are present only where the identity
/// defines them.
struct VerificationRecord {
    Integer n;
    std::string lhs;
    std::string rhs;
    std::optional<Integer> bound1;
    std::optional<Integer> bound2;
    std::optional<Integer> slack;
    bool pass = false;
    std::string note;  // e.g. "valuation-undefined" for a flagged record
};

struct VerificationReport {
    std::string identity;
    Integer range_lo;
    Integer range_hi;
    std::vector<VerificationRecord> records;
    bool all_pass = false;

    void finalize() {
        all_pass = std::all_of(records.begin(), records.end(),
                               [](const VerificationRecord& r) { return r.pass; });
    }
};

namespace report_io {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string opt_str(const std::optional<Integer>& v) {
    return v ? v->str() : std::string();
}

inline void write_csv(const VerificationReport& rep, std::ostream& os) {
    os << "identity,n,lhs,rhs,bound1,bound2,slack,pass\n";
    for (const auto& r : rep.records) {
        os << csv_field(rep.identity) << ',' << r.n.str() << ',' << csv_field(r.lhs) << ','
           << csv_field(r.rhs) << ',' << opt_str(r.bound1) << ',' << opt_str(r.bound2) << ','
           << opt_str(r.slack) << ',' << (r.pass ? "true" : "false") << '\n';
    }
}

inline void write_jsonl(const VerificationReport& rep, std::ostream& os) {
    for (const auto& r : rep.records) {
        nlohmann::ordered_json j;
        j["identity"] = rep.identity;
        j["n"] = r.n.str();
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        if (r.bound1) j["bound1"] = r.bound1->str();
        if (r.bound2) j["bound2"] = r.bound2->str();
        if (r.slack) j["slack"] = r.slack->str();
        j["pass"] = r.pass;
        if (!r.note.empty()) j["note"] = r.note;
        os << j.dump() << '\n';
    }
}

inline void write_plain(const VerificationReport& rep, std::ostream& os) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"n", "lhs", "rhs", "bound1", "bound2", "slack", "pass"});
    for (const auto& r : rep.records)
        rows.push_back({r.n.str(), r.lhs, r.rhs, opt_str(r.bound1), opt_str(r.bound2),
                        opt_str(r.slack), r.pass ? "true" : "false"});
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << row[i];
            if (i + 1 < row.size()) os << std::string(width[i] - row[i].size() + 2, ' ');
        }
        os << '\n';
    }
    os << rep.identity << ": " << (rep.all_pass ? "all-pass" : "FAIL") << " over ["
       << rep.range_lo.str() << ", " << rep.range_hi.str() << "]\n";
}

}  // namespace report_io
}  // namespace glab
