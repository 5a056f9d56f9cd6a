#ifndef ADSWEDGE_REPORT_HPP
#define ADSWEDGE_REPORT_HPP

// Check records and their JSON / CSV serialisation. Records are sorted by id
// before output and carry no timing, so identical runs give identical bytes.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef ADSWEDGE_VERSION
#define ADSWEDGE_VERSION "0.0.0"
#endif

namespace adswedge
{

inline constexpr const char* kReportSchema = "adswedge-report/1";

enum class Status
{
    pass,
    fail,
    unknown,
};

inline const char* status_name(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::unknown:
        return "unknown";
    }
    return "?";
}

enum class Format
{
    json,
    csv,
};

struct RunConfig
{
    std::uint64_t seed = 1;
    int n = 0; // 0: the suite's own dimension grid
    std::map<std::string, double> tol;
    std::string out;  // empty: stdout
    Format format = Format::json;
    std::string only; // run only checks whose id starts with this prefix

    double tolerance(const std::string& key, double fallback) const
    {
        const auto it = tol.find(key);
        return it == tol.end() ? fallback : it->second;
    }
};

struct CheckResult
{
    std::string id;
    std::string anchor; // what identity or property is checked
    Status status = Status::unknown;
    double metric = 0.0;
    double tolerance = 0.0;
    nlohmann::json witness; // null unless the check failed or is unknown
    nlohmann::json details = nlohmann::json::object();
};

// Pass iff metric <= tolerance; a failing record gets the witness.
inline CheckResult bounded(std::string id, std::string anchor, double metric, double tolerance,
                           nlohmann::json witness = nlohmann::json::object())
{
    CheckResult r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.metric = metric;
    r.tolerance = tolerance;
    r.status = (std::isfinite(metric) && metric <= tolerance) ? Status::pass : Status::fail;
    if (r.status != Status::pass)
        r.witness = std::move(witness);
    return r;
}

inline CheckResult predicate(std::string id, std::string anchor, bool ok, nlohmann::json witness = {})
{
    CheckResult r = bounded(std::move(id), std::move(anchor), ok ? 0.0 : 1.0, 0.0, std::move(witness));
    if (r.status == Status::fail && r.witness.is_null())
        r.witness = nlohmann::json::object();
    return r;
}

struct CheckSpec
{
    std::string id;
    std::function<CheckResult()> run;
};

struct Report
{
    std::string suite;
    RunConfig config;
    std::vector<CheckResult> checks;

    int count(Status s) const
    {
        return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.status == s; }));
    }
    bool any_fail() const { return count(Status::fail) > 0; }
};

inline Report run_checks(const std::string& suite, const RunConfig& config, const std::vector<CheckSpec>& specs)
{
    Report rep;
    rep.suite = suite;
    rep.config = config;
    for (const CheckSpec& s : specs) {
        if (!config.only.empty() && s.id.rfind(config.only, 0) != 0)
            continue;
        CheckResult r;
        try {
            r = s.run();
        } catch (const std::exception& e) {
            r.id = s.id;
            r.anchor = "check raised an error";
            r.status = Status::fail;
            r.metric = INFINITY;
            r.witness = {{"error", e.what()}};
        }
        if (r.id != s.id)
            throw std::logic_error("check id mismatch: " + s.id + " vs " + r.id);
        if (r.status == Status::fail && r.witness.is_null())
            throw std::logic_error("failing check without witness: " + r.id);
        rep.checks.push_back(std::move(r));
    }
    std::sort(rep.checks.begin(), rep.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return rep;
}

inline nlohmann::json json_number(double x)
{
    if (std::isfinite(x))
        return x;
    return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

inline nlohmann::json config_json(const RunConfig& c)
{
    nlohmann::json tol = nlohmann::json::object();
    for (const auto& [k, v] : c.tol)
        tol[k] = json_number(v);
    return {{"seed", c.seed},
            {"n", c.n},
            {"tol", tol},
            {"format", c.format == Format::json ? "json" : "csv"},
            {"only", c.only}};
}

inline nlohmann::json to_json(const CheckResult& r)
{
    nlohmann::json j = {{"id", r.id},
                        {"anchor", r.anchor},
                        {"status", status_name(r.status)},
                        {"metric", json_number(r.metric)},
                        {"tolerance", json_number(r.tolerance)}};
    if (!r.witness.is_null())
        j["witness"] = r.witness;
    if (!r.details.empty())
        j["details"] = r.details;
    return j;
}

inline nlohmann::json to_json(const Report& rep)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& r : rep.checks)
        checks.push_back(to_json(r));
    return {{"schema", kReportSchema},
            {"version", ADSWEDGE_VERSION},
            {"suite", rep.suite},
            {"config", config_json(rep.config)},
            {"checks", checks},
            {"summary",
             {{"pass", rep.count(Status::pass)},
              {"fail", rep.count(Status::fail)},
              {"unknown", rep.count(Status::unknown)}}}};
}

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

inline std::string csv_number(double x)
{
    const nlohmann::json j = json_number(x);
    return j.is_string() ? j.get<std::string>() : j.dump();
}

// Fixed columns: suite,id,status,metric,tolerance,anchor,witness
inline std::string to_csv(const Report& rep)
{
    std::ostringstream os;
    os << "suite,id,status,metric,tolerance,anchor,witness\n";
    for (const CheckResult& r : rep.checks)
        os << csv_field(rep.suite) << ',' << csv_field(r.id) << ',' << status_name(r.status) << ','
           << csv_number(r.metric) << ',' << csv_number(r.tolerance) << ',' << csv_field(r.anchor) << ','
           << csv_field(r.witness.is_null() ? "" : r.witness.dump()) << '\n';
    return os.str();
}

inline std::string render(const Report& rep)
{
    return rep.config.format == Format::json ? to_json(rep).dump(2) + "\n" : to_csv(rep);
}

} // namespace adswedge

#endif // ADSWEDGE_REPORT_HPP
