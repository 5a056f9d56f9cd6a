// adswedge: run a check suite and write a JSON or CSV report.
// Exit status: 0 all checks pass, 1 some check failed, 2 usage error.

#include <adswedge/suites.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace
{

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string suite_list()
{
    std::string s;
    for (std::string_view n : adswedge::kSuiteNames)
        s += std::string(n) + ", ";
    return s + "all";
}

void parse_tolerance(const std::string& kv, std::map<std::string, double>& out)
{
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
        throw CLI::ValidationError("--tol", "expected KEY=VALUE, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    if (!adswedge::known_tolerance_key(key))
        throw CLI::ValidationError("--tol", "unknown tolerance key '" + key + "' (see --list-tol)");
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(kv.substr(eq + 1), &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != kv.size() - eq - 1 || !std::isfinite(value) || value < 0.0)
        throw CLI::ValidationError("--tol", "bad value in '" + kv + "'");
    out[key] = value;
}

bool write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    f << text;
    f.close();
    return static_cast<bool>(f);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Deterministic check suites for AdS wedge geometry, nets and free fields"};
    app.set_version_flag("--version", std::string(ADSWEDGE_VERSION));

    adswedge::RunConfig cfg;
    std::string suite;
    std::string format = "json";
    std::vector<std::string> tols;
    std::string scan_csv;
    bool list_tol = false;
    bool list_checks = false;

    app.add_option("--suite", suite, "suite to run: " + suite_list());
    app.add_option("--seed", cfg.seed, "base seed of every random stream")->default_val(1);
    app.add_option("--n", cfg.n, "ambient dimension n; 0 runs each suite's own grid")
        ->default_val(0)
        ->check(CLI::Range(0, 8));
    app.add_option("--tol", tols, "tolerance override KEY=VALUE (repeatable)");
    app.add_option("--out", cfg.out, "report path (default stdout)");
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}))->default_val("json");
    app.add_option("--only", cfg.only, "run only checks whose id starts with this prefix");
    app.add_option("--scan-csv", scan_csv, "also write the weak-locality scans as plot-ready CSV");
    app.add_flag("--list-tol", list_tol, "print the tolerance keys and defaults, then exit");
    app.add_flag("--list", list_checks, "print the check ids of --suite, then exit");

    try {
        app.parse(argc, argv);
        for (const std::string& kv : tols)
            parse_tolerance(kv, cfg.tol);
        if (!list_tol && suite.empty())
            throw CLI::RequiredError("--suite");
        if (!suite.empty() && suite != "all" &&
            std::find(adswedge::kSuiteNames.begin(), adswedge::kSuiteNames.end(), suite) ==
                adswedge::kSuiteNames.end())
            throw CLI::ValidationError("--suite", "unknown suite '" + suite + "'; expected one of " + suite_list());
        if (cfg.n == 1)
            throw CLI::ValidationError("--n", "dimension must be 0 or at least 2");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    cfg.format = format == "csv" ? adswedge::Format::csv : adswedge::Format::json;

    if (list_tol) {
        for (const auto& k : adswedge::kToleranceKeys)
            std::cout << k.key << '\t' << k.fallback << '\t' << k.meaning << '\n';
        return 0;
    }

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<adswedge::CheckSpec> specs;
    try {
        specs = adswedge::suite_checks(suite, cfg);
    } catch (const std::exception& e) {
        std::cerr << "adswedge: " << e.what() << '\n';
        return kExitUsage;
    }
    if (list_checks) {
        for (const auto& s : specs)
            if (cfg.only.empty() || s.id.rfind(cfg.only, 0) == 0)
                std::cout << s.id << '\n';
        return 0;
    }

    const adswedge::Report rep = adswedge::run_checks(suite, cfg, specs);
    const std::string text = adswedge::render(rep);
    if (cfg.out.empty()) {
        std::cout << text;
    } else if (!write_file(cfg.out, text)) {
        std::cerr << "adswedge: cannot write " << cfg.out << '\n';
        return kExitUsage;
    }
    if (!scan_csv.empty() && !write_file(scan_csv, adswedge::locality_csv(adswedge::run_locality_scans(cfg)))) {
        std::cerr << "adswedge: cannot write " << scan_csv << '\n';
        return kExitUsage;
    }

    // timing stays out of the report so that reruns are byte-identical
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "adswedge: suite " << suite << ": " << rep.count(adswedge::Status::pass) << " pass, "
              << rep.count(adswedge::Status::fail) << " fail, " << rep.count(adswedge::Status::unknown)
              << " unknown, wall time " << secs << " s\n";
    return rep.any_fail() ? kExitFail : 0;
}
