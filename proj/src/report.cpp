#include "tribq/report.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>
#include <system_error>
#include <unistd.h>

namespace tribq {

nlohmann::json to_json(const Quaternion& q) {
    return {{"a0", to_decimal(q.a0)}, {"a1", to_decimal(q.a1)}, {"a2", to_decimal(q.a2)}, {"a3", to_decimal(q.a3)}};
}

Quaternion quaternion_from_json(const nlohmann::json& j) {
    Quaternion q;
    const char* keys[] = {"a0", "a1", "a2", "a3"};
    for (std::size_t c = 0; c < 4; ++c) {
        if (!j.contains(keys[c]) || !j[keys[c]].is_string()) {
            throw std::invalid_argument(std::string("quaternion JSON needs string field ") + keys[c]);
        }
        q[c] = parse_decimal(j[keys[c]].get<std::string>());
    }
    return q;
}

namespace {

nlohmann::json indices_json(const std::vector<std::string>& vars, const std::vector<Index>& point) {
    nlohmann::json out = nlohmann::json::object();
    for (std::size_t v = 0; v < vars.size(); ++v) out[vars[v]] = point[v];
    return out;
}

}  // namespace

nlohmann::json to_json(const VerdictReport& report) {
    nlohmann::json checked = nlohmann::json::object();
    for (std::size_t v = 0; v < report.vars.size(); ++v) {
        checked[report.vars[v]] = {report.checked[v].lo, report.checked[v].hi};
    }
    nlohmann::json examples = nlohmann::json::array();
    for (const auto& c : report.counterexamples) {
        examples.push_back(
            {{"indices", indices_json(report.vars, c.indices)}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}});
    }
    return {
        {"id", report.id},
        {"paper_ref", report.paper_ref},
        {"domain", report.domain},
        {"checked", checked},
        {"status", report.status == Status::pass ? "pass" : "fail"},
        {"counterexample_count", report.counterexample_count},
        {"counterexamples", examples},
        {"minimal_counterexample",
         report.minimal_counterexample ? indices_json(report.vars, *report.minimal_counterexample) : nlohmann::json()},
        {"elapsed_ms", report.elapsed_ms},
    };
}

nlohmann::json audit_to_json(const AuditResult& result, const AuditProfile& profile, const ReportOptions& options) {
    nlohmann::json results = nlohmann::json::array();
    for (const auto& r : result.reports) {
        nlohmann::json entry = to_json(r);
        if (!options.timestamps) entry["elapsed_ms"] = 0;
        results.push_back(std::move(entry));
    }
    nlohmann::json ids = nlohmann::json::array();
    for (const auto& r : result.reports) ids.push_back(r.id);
    nlohmann::json out = {
        {"version", kReportSchemaVersion},
        {"bounds",
         {{"single_variable", {{"max_n", profile.max_n}}},
          {"two_variable", {{"max", profile.max_m}}},
          {"unrestricted_lower_bound", kNegativeFloor}}},
        {"results", results},
        {"notes", result.notes},
    };
    if (options.timestamps) out["generated_at"] = utc_timestamp();
    return out;
}

std::string serialize(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << contents;
        out.flush();
        if (!out) throw std::runtime_error("failed writing " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot move report into place at " + path.string() + ": " + ec.message());
    }
}

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace tribq
