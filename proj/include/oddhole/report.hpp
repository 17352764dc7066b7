#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include "oddhole/checks.hpp"
#include "oddhole/version.hpp"

namespace oddhole {

namespace detail {

inline json membership_json(const MembershipVerdict& v) {
    json j;
    switch (v.status) {
        case MembershipVerdict::Status::InGl: j["status"] = "in"; break;
        case MembershipVerdict::Status::OutGl: j["status"] = "out"; break;
        case MembershipVerdict::Status::Unknown: j["status"] = "unknown"; break;
    }
    j["l"] = v.l;
    j["reason"] = v.reason;
    j["certificate"] = v.certificate ? json(v.certificate->v) : json(nullptr);
    j["budget"] = json{{"limit", v.budget.limit},
                       {"used", v.budget.used},
                       {"exhausted", v.budget.exhausted}};
    return j;
}

}  // namespace detail

// Stable-ordering JSON rendering of a suite report. Timings are deliberately
// excluded here so that identical inputs produce byte-identical reports; the
// text renderer shows them instead.
inline json report_json(const SuiteReport& rep) {
    json out;
    out["tool"] = "oddhole";
    out["version"] = version_string;
    out["l"] = rep.l;
    out["budget_limit"] = rep.budget_limit;
    out["seed"] = rep.seed;
    json entries = json::array();
    int pass = 0, fail = 0, skipped = 0, unknown = 0;
    for (const auto& e : rep.entries) {
        json je;
        je["id"] = e.id;
        je["provenance"] = e.provenance;
        je["n"] = e.n;
        je["m"] = e.m;
        je["membership"] = detail::membership_json(e.membership);
        json checks = json::array();
        for (const auto& c : e.checks) {
            json jc;
            jc["id"] = c.id;
            jc["status"] = to_string(c.status);
            jc["pass"] = c.pass;
            jc["fail"] = c.fail;
            jc["skipped"] = c.skipped;
            jc["unknown"] = c.unknown;
            jc["reasons"] = c.reasons;
            jc["witness"] = c.witness.is_null() ? json(nullptr) : c.witness;
            checks.push_back(std::move(jc));
            switch (c.status) {
                case CheckStatus::Pass: ++pass; break;
                case CheckStatus::Fail: ++fail; break;
                case CheckStatus::Skipped: ++skipped; break;
                case CheckStatus::Unknown: ++unknown; break;
            }
        }
        je["checks"] = std::move(checks);
        entries.push_back(std::move(je));
    }
    out["entries"] = std::move(entries);
    out["summary"] = json{{"pass", pass},
                          {"fail", fail},
                          {"skipped", skipped},
                          {"unknown", unknown}};
    return out;
}

inline std::string report_text(const SuiteReport& rep) {
    std::ostringstream os;
    os << "oddhole " << version_string << "  lemma suite  l=" << rep.l
       << "  budget=" << rep.budget_limit << "  seed=" << rep.seed << "\n";
    int pass = 0, fail = 0, skipped = 0, unknown = 0;
    for (const auto& e : rep.entries) {
        std::string mstat =
            e.membership.status == MembershipVerdict::Status::InGl    ? "in"
            : e.membership.status == MembershipVerdict::Status::OutGl ? "out"
                                                                      : "unknown";
        os << "\n" << e.id << "  (" << e.provenance << ")  n=" << e.n
           << " m=" << e.m << "  membership=" << mstat << "  ["
           << std::fixed << std::setprecision(1) << e.membership_ms << " ms]\n";
        for (const auto& c : e.checks) {
            os << "  " << std::left << std::setw(8) << c.id << std::setw(8)
               << to_string(c.status) << " pass=" << c.pass << " fail=" << c.fail
               << " skip=" << c.skipped << " unk=" << c.unknown << "  ["
               << std::fixed << std::setprecision(1) << c.elapsed_ms << " ms]";
            if (!c.reasons.empty()) {
                os << "  (";
                for (std::size_t i = 0; i < c.reasons.size(); ++i)
                    os << (i ? "; " : "") << c.reasons[i];
                os << ")";
            }
            os << "\n";
            switch (c.status) {
                case CheckStatus::Pass: ++pass; break;
                case CheckStatus::Fail: ++fail; break;
                case CheckStatus::Skipped: ++skipped; break;
                case CheckStatus::Unknown: ++unknown; break;
            }
        }
    }
    os << "\nsummary: pass=" << pass << " fail=" << fail << " skipped=" << skipped
       << " unknown=" << unknown << "\n";
    return os.str();
}

// Serialize a report. Formats: "json" (stable, deterministic) or "text".
inline std::string emit_report(const SuiteReport& rep, const std::string& format) {
    if (format == "json") return report_json(rep).dump(2) + "\n";
    if (format == "text") return report_text(rep);
    throw std::invalid_argument("unknown report format: " + format);
}

}  // namespace oddhole
