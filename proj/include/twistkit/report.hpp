#pragma once

// Verification reports and their JSON / text rendering.

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace twistkit {

inline constexpr const char* kEngineVersion = "twistkit 1.0.0";

struct Check {
    std::string check_id;
    std::string paper_anchor;
    std::string status;    // pass | fail | documented-misprint
    std::string residual;  // "0", a serialized value, or a divisibility exponent
    std::string printed_form;
    std::string derived_form;
    bool failed() const { return status == "fail"; }
};

struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<Check> checks;
    std::vector<nlohmann::ordered_json> records;  // extra tables (e.g. convergence)

    void add(Check c) { checks.push_back(std::move(c)); }
    void add(const std::string& id, const std::string& anchor, bool ok, const std::string& residual) {
        checks.push_back({id, anchor, ok ? "pass" : "fail", residual, "", ""});
    }
    void merge(const VerificationReport& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
        records.insert(records.end(), o.records.begin(), o.records.end());
    }
    bool all_pass() const {
        return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.failed(); });
    }
    const Check* find(const std::string& id) const {
        for (const auto& c : checks)
            if (c.check_id == id) return &c;
        return nullptr;
    }
    void sort() {
        std::stable_sort(checks.begin(), checks.end(),
                         [](const Check& a, const Check& b) { return a.check_id < b.check_id; });
    }
};

inline nlohmann::ordered_json report_json(VerificationReport r) {
    r.sort();
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.config) cfg[k] = v;
    j["config"] = cfg;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json e;
        e["check_id"] = c.check_id;
        e["paper_anchor"] = c.paper_anchor;
        e["status"] = c.status;
        e["residual"] = c.residual;
        if (c.status == "documented-misprint" || !c.printed_form.empty()) {
            e["printed_form"] = c.printed_form;
            e["derived_form"] = c.derived_form;
        }
        checks.push_back(e);
    }
    j["checks"] = checks;
    if (!r.records.empty()) j["records"] = r.records;
    j["engine_version"] = kEngineVersion;
    return j;
}

inline std::string report_text(VerificationReport r) {
    r.sort();
    size_t wid = 8, wst = 6;
    for (const auto& c : r.checks) {
        wid = std::max(wid, c.check_id.size());
        wst = std::max(wst, c.status.size());
    }
    std::ostringstream os;
    os << "suite: " << r.suite << "\n";
    for (const auto& [k, v] : r.config) os << "  " << k << " = " << v << "\n";
    os << std::left << std::setw(static_cast<int>(wid)) << "check_id" << "  " << std::setw(static_cast<int>(wst))
       << "status" << "  residual\n";
    for (const auto& c : r.checks) {
        std::string res = c.residual;
        if (res.size() > 60) res = res.substr(0, 57) + "...";
        os << std::setw(static_cast<int>(wid)) << c.check_id << "  " << std::setw(static_cast<int>(wst)) << c.status
           << "  " << res << "\n";
    }
    for (const auto& rec : r.records) os << rec.dump() << "\n";
    os << "engine: " << kEngineVersion << "\n";
    return os.str();
}

}  // namespace twistkit
