// dp1: enumerate classes, regenerate the tables and run the verification
// suite for real del Pezzo surfaces of degree 1.
//
// Exit status: 0 success, 1 a verification check failed (or a computation
// aborted), 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dp1/errors.hpp"
#include "dp1/real_forms.hpp"
#include "dp1/report.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string class_selector = "all";
    std::optional<int> stratum;
    std::string format = "md";
    std::string out;
    bool verbose = false;
};

std::vector<dp1::ClassId> select_classes(const std::string& selector) {
    std::vector<dp1::ClassId> out;
    if (selector == "all") {
        for (const auto& c : dp1::deformation_classes()) out.push_back(c.id);
        return out;
    }
    const auto id = dp1::find_class(selector);
    if (!id) throw UsageError("unknown class '" + selector + "'");
    out.push_back(*id);
    return out;
}

dp1::Format select_format(const std::string& s) {
    const auto f = dp1::parse_format(s);
    if (!f) throw UsageError("unknown format '" + s + "' (json, csv or md)");
    return *f;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << text;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "Output format: json, csv or md")->capture_default_str();
    cmd->add_option("--out", cfg.out, "Write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice counts for real del Pezzo surfaces of degree 1"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_flag("-v,--verbose", cfg.verbose, "Progress and summaries on stderr");

    auto* classes = app.add_subcommand("classes", "List the 11 real deformation classes");
    bool pairs = false;
    classes->add_flag("--pairs", pairs, "List the 7 Bertini pairs instead");
    add_common(classes, cfg);

    auto* enumerate = app.add_subcommand("enumerate", "List B^0, B^2 or B^4 of a class with q-hat values");
    enumerate->add_option("--class", cfg.class_selector, "Class name, lattice type or 'all'")->capture_default_str();
    enumerate->add_option("--stratum", cfg.stratum, "0, 2 or 4 (default 2)");
    add_common(enumerate, cfg);

    auto* tables = app.add_subcommand("tables", "Regenerate tables 2 to 7");
    std::vector<int> table_numbers;
    tables->add_option("n", table_numbers, "Table numbers (default: all)");
    tables->add_option("--class", cfg.class_selector, "Restrict table 7 to one class")->capture_default_str();
    add_common(tables, cfg);

    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    std::string fixture;
    verify->add_option("--class", cfg.class_selector, "Class name, lattice type or 'all'")->capture_default_str();
    verify->add_option("--fixture", fixture, "JSON file with replacement lattice bases");
    add_common(verify, cfg);

    auto* wallcross = app.add_subcommand("wallcross", "Splitting classification at every vanishing root");
    wallcross->add_option("--class", cfg.class_selector, "Class name, lattice type or 'all'")->capture_default_str();
    wallcross->add_option("--stratum", cfg.stratum, "Restrict to alpha in B^0, B^2 or B^4");
    add_common(wallcross, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const dp1::Format format = select_format(cfg.format);
        // Validate selectors before any computation.
        const auto ids = select_classes(cfg.class_selector);
        if (cfg.stratum && *cfg.stratum != 0 && *cfg.stratum != 2 && *cfg.stratum != 4)
            throw UsageError("stratum must be 0, 2 or 4");

        if (classes->parsed()) {
            emit(cfg, dp1::render(pairs ? dp1::pairs_table() : dp1::classes_table(), format));
            return 0;
        }
        if (enumerate->parsed()) {
            std::vector<dp1::TableDocument> docs;
            for (auto id : ids) docs.push_back(dp1::enumerate_table(id, cfg.stratum.value_or(2)));
            emit(cfg, dp1::render(docs, format));
            return 0;
        }
        if (tables->parsed()) {
            if (table_numbers.empty()) table_numbers = {2, 3, 4, 5, 6, 7};
            for (int n : table_numbers)
                if (n < 2 || n > 7) throw UsageError("table number must be in 2..7");
            std::optional<dp1::ClassId> only;
            if (cfg.class_selector != "all") only = ids.front();
            std::vector<dp1::TableDocument> docs;
            for (int n : table_numbers) docs.push_back(dp1::published_table(n, only));
            emit(cfg, dp1::render(docs, format));
            return 0;
        }
        if (verify->parsed()) {
            dp1::VerifyOptions opts;
            if (cfg.class_selector != "all") opts.scope = ids.front();
            if (!fixture.empty()) {
                std::ifstream f(fixture);
                if (!f) throw UsageError("cannot read fixture " + fixture);
                nlohmann::json doc;
                try {
                    doc = nlohmann::json::parse(f);
                    opts.basis_overrides = dp1::parse_fixture(doc);
                } catch (const std::exception& e) {
                    throw UsageError(std::string("bad fixture: ") + e.what());
                }
            }
            const auto report = dp1::run_verification(opts);
            emit(cfg, dp1::render(report, format));
            if (cfg.verbose || !report.all_pass()) {
                for (const auto& r : report.records)
                    if (!r.pass)
                        std::cerr << "FAIL " << r.check << ": expected " << r.expected << ", got " << r.actual << "\n";
                std::cerr << (report.records.size() - report.failed()) << "/" << report.records.size()
                          << " checks passed\n";
            }
            return report.all_pass() ? 0 : kExitFail;
        }
        if (wallcross->parsed()) {
            std::vector<dp1::TableDocument> docs;
            for (auto id : ids)
                if (dp1::deformation_class(id).rank > 0) docs.push_back(dp1::wallcross_table(id, cfg.stratum));
            emit(cfg, dp1::render(docs, format));
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "dp1: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "dp1: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
