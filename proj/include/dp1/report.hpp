#pragma once

// Verification records, the published reference tables they are checked
// against, and json/csv/markdown rendering of reports and tables.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dp1/counting.hpp"
#include "dp1/real_forms.hpp"

namespace dp1 {

struct VerificationRecord {
    std::string check;   // "theorem30/M-connected"
    std::string anchor;  // "theorem30", "table6/M/C4+", ...
    Int expected = 0;
    Provenance provenance = Provenance::Enumerated;
    Int actual = 0;
    bool pass = false;

    bool operator==(const VerificationRecord&) const = default;
};

struct VerificationReport {
    std::string scope;  // "all" or a class name
    std::vector<VerificationRecord> records;

    bool all_pass() const;
    std::size_t failed() const;
    bool operator==(const VerificationReport&) const = default;
};

struct VerifyOptions {
    std::optional<ClassId> scope;  // nullopt = all classes
    /// Replacement Lambda bases, e.g. from a fixture file.
    std::map<ClassId, std::vector<PicClass>> basis_overrides;
};

VerificationReport run_verification(const VerifyOptions& options);

/// Reads {"embeddings": [{"class": "<name>", "basis": [[c0,...,c8], ...]}]}.
/// Throws std::invalid_argument on malformed input or unknown class names.
std::map<ClassId, std::vector<PicClass>> parse_fixture(const nlohmann::json& doc);

// Published reference tables.

struct ReferenceRow {
    Int level = 0;
    std::vector<Int> pattern;  // as in LevelRow
    std::optional<Int> pair_coeff;
    Int count = 0;
    int qhat = 0;

    bool operator==(const ReferenceRow&) const = default;
};

/// Roots of E8 by |h-coefficient| (pattern unused).
std::vector<ReferenceRow> reference_table2();
/// B^2 of E8 by the h-coefficient of alpha (pattern unused).
std::vector<ReferenceRow> reference_table3();
/// B^4 of E8 by level and exceptional pattern.
std::vector<ReferenceRow> reference_table4();
/// Real B^4 of the E7 code model by level, real pattern and pair coefficient.
std::vector<ReferenceRow> reference_table5();
/// Keyed by (row, column) as in table6().
std::map<std::pair<std::string, std::string>, Int> reference_table6();

/// Converts computed rows to reference form for comparison.
std::vector<ReferenceRow> to_reference_rows(const std::vector<LevelRow>& rows, bool keep_pattern);

// Generic tables for the CLI.

struct TableCell {
    bool numeric = false;
    Int number = 0;
    std::string text;
    std::optional<Provenance> provenance;
    std::string anchor;

    static TableCell label(std::string s) { return {false, 0, std::move(s), std::nullopt, {}}; }
    static TableCell value(Int v, std::optional<Provenance> p = std::nullopt, std::string anchor = {}) {
        return {true, v, {}, p, std::move(anchor)};
    }
};

struct TableDocument {
    std::string name;  // "table2", "classes", ...
    std::string title;
    std::vector<std::string> columns;  // lower_snake_case
    std::vector<std::vector<TableCell>> rows;
};

enum class Format { Json, Csv, Markdown };

std::optional<Format> parse_format(const std::string& s);

std::string render(const TableDocument& doc, Format format);
std::string render(const std::vector<TableDocument>& docs, Format format);
std::string render(const VerificationReport& report, Format format);

void to_json(nlohmann::json& j, const VerificationRecord& r);
void from_json(const nlohmann::json& j, VerificationRecord& r);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

// Builders used by the CLI.

TableDocument classes_table();
TableDocument pairs_table();
TableDocument enumerate_table(ClassId id, int stratum);
/// n in 2..7; `id` narrows table 7 to one class.
TableDocument published_table(int n, std::optional<ClassId> id = std::nullopt);
TableDocument wallcross_table(ClassId id, std::optional<int> stratum);

}  // namespace dp1
