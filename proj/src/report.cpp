#include "dp1/report.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dp1/errors.hpp"
#include "dp1/wallcross.hpp"

namespace dp1 {

namespace {

using ordered_json = nlohmann::ordered_json;

const PicClass kMinus2K = Int{-2} * PicClass::canonical();

std::string pattern_text(const std::vector<Int>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

std::string snake(std::string s) {
    std::string out;
    for (char c : s) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        } else if (!out.empty() && out.back() != '_') {
            out += '_';
        }
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out;
}

class Recorder {
public:
    explicit Recorder(VerificationReport& r) : report_(r) {}
    void add(std::string check, std::string anchor, Int expected, Int actual,
             Provenance p = Provenance::Enumerated) {
        report_.records.push_back({std::move(check), std::move(anchor), expected, p, actual, expected == actual});
    }

private:
    VerificationReport& report_;
};

// Compares computed level rows with a reference table, one count record and
// one q-hat record per reference row.
void record_table(Recorder& rec, const std::string& table, const std::vector<ReferenceRow>& want,
                  const std::vector<ReferenceRow>& got) {
    rec.add(table + "/rows", table, static_cast<Int>(want.size()), static_cast<Int>(got.size()));
    for (const auto& w : want) {
        std::string key = "level=" + std::to_string(w.level);
        if (!w.pattern.empty()) key += "/pattern=" + pattern_text(w.pattern);
        if (w.pair_coeff) key += "/pair=" + std::to_string(*w.pair_coeff);
        auto it = std::find_if(got.begin(), got.end(), [&](const ReferenceRow& g) {
            return g.level == w.level && g.pattern == w.pattern && g.pair_coeff == w.pair_coeff;
        });
        rec.add(table + "/" + key + "/count", table, w.count, it == got.end() ? 0 : it->count);
        rec.add(table + "/" + key + "/qhat", table, w.qhat, it == got.end() ? -1 : it->qhat);
    }
}

struct ClassSums {
    Int s1 = 0, s4 = 0;
};

void verify_pin(Recorder& rec, const ClassModel& m) {
    const std::string name = class_name(m.id);
    std::vector<PicClass> vs = m.roots;
    vs.insert(vs.end(), m.minus4.begin(), m.minus4.end());
    Int parity = 0, negation = 0;
    for (const auto& x : vs) {
        const QhatValue q = m.qhat(x);
        if ((q.value() - square(x)) % 2 != 0) ++parity;
        if (m.qhat(-x) != q) ++negation;
    }
    rec.add("pin/" + name + "/parity", "qhat-parity", 0, parity);
    rec.add("pin/" + name + "/negation", "qhat-negation", 0, negation);
    Int law = 0;
    for (const auto& x : m.roots)
        for (const auto& y : m.roots)
            if (m.qhat(x + y) != m.qhat(x) + m.qhat(y) + QhatValue(2 * intersect(x, y))) ++law;
    rec.add("pin/" + name + "/quadratic-law", "qhat-quadratic-law", 0, law);
    if (std::holds_alternative<Code>(m.pin)) {
        Int split = 0;
        for (const auto& x : vs)
            if (m.qhat(kMinus2K - x) != m.qhat(x)) ++split;
        rec.add("pin/" + name + "/alpha-equals-v", "qhat-orthogonal-split", 0, split);
        rec.add("pin/" + name + "/qhat-minus-k", "code-relation", 1, m.qhat(-PicClass::canonical()).value());
    }
}

void verify_wallcross(Recorder& rec, const ClassModel& m) {
    const auto& c = m.info();
    const std::string name = c.name;
    const Int r = c.rank, rd = bertini_dual(c).rank;
    const auto es = vanishing_roots(m);
    rec.add("wallcross/" + name + "/vanishing-roots", "vanishing-roots",
            (static_cast<Int>(m.roots.size()) + 2 * r) / 2, static_cast<Int>(es.size()));
    std::vector<BClass> all;
    for (int k = 0; k <= 2; ++k) {
        auto b = b_classes(m, k);
        all.insert(all.end(), b.begin(), b.end());
    }
    Int split_bad = 0, orth_bad = 0, pair4_bad = 0, pair2_bad = 0, delta_bad = 0, reflex_bad = 0;
    const DeltaTable want = delta_formulas(r, rd);
    std::optional<Int> balance;
    for (const auto& e : es) {
        for (const auto& a : all) {
            const auto got = splittings(m, a, e);
            const auto ref = reference_splittings(a.stratum, intersect(a.v, e.e));
            bool same = got.size() == ref.size();
            for (std::size_t i = 0; same && i < got.size(); ++i)
                same = got[i].r == ref[i].r && got[i].d_square == ref[i].d_square &&
                       got[i].d_dot_e == ref[i].d_dot_e && got[i].d_stratum == ref[i].d_stratum;
            if (!same) ++split_bad;
        }
        if (orth_root_sum(m, e) != 2 * (r - 1)) ++orth_bad;
        try {
            if (pairing_cancellation(m, e, 2) != 0) ++pair4_bad;
            if (pairing_cancellation(m, e, 1) != 0) ++pair2_bad;
            const DeltaTable t = delta_table(m, e);
            if (t.d41 != want.d41 || t.d42 != want.d42 || t.d20 != want.d20 || t.d21 != want.d21 || t.d22 != want.d22 ||
                t.d42 + t.d20 != 0)
                ++delta_bad;
            if (!balance) balance = t.weighted_balance();
        } catch (const InvariantViolation&) {
            ++reflex_bad;
        }
    }
    rec.add("wallcross/" + name + "/splittings", "splitting-table", 0, split_bad);
    rec.add("wallcross/" + name + "/orth-root-sum", "orth-root-sum", 0, orth_bad);
    rec.add("wallcross/" + name + "/pairing-b4", "pairing-cancellation", 0, pair4_bad);
    rec.add("wallcross/" + name + "/pairing-b2", "pairing-cancellation", 0, pair2_bad);
    rec.add("wallcross/" + name + "/reflection-qhat", "pairing-cancellation", 0, reflex_bad);
    rec.add("wallcross/" + name + "/delta-table", "table7", 0, delta_bad, Provenance::CitedFormula);
    if (balance) rec.add("wallcross/" + name + "/weighted-balance", "table7/balance", 12, *balance, Provenance::CitedFormula);
}

}  // namespace

bool VerificationReport::all_pass() const { return failed() == 0; }

std::size_t VerificationReport::failed() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.pass; }));
}

std::map<ClassId, std::vector<PicClass>> parse_fixture(const nlohmann::json& doc) {
    std::map<ClassId, std::vector<PicClass>> out;
    if (!doc.is_object() || !doc.contains("embeddings") || !doc["embeddings"].is_array())
        throw std::invalid_argument("fixture must be an object with an \"embeddings\" array");
    for (const auto& e : doc["embeddings"]) {
        if (!e.contains("class") || !e["class"].is_string() || !e.contains("basis") || !e["basis"].is_array())
            throw std::invalid_argument("each embedding needs \"class\" and \"basis\"");
        const auto id = find_class(e["class"].get<std::string>());
        if (!id) throw std::invalid_argument("unknown class " + e["class"].get<std::string>());
        std::vector<PicClass> basis;
        for (const auto& v : e["basis"]) {
            if (!v.is_array() || v.size() != PicClass::kSize)
                throw std::invalid_argument("basis vectors must have 9 integer coordinates");
            PicClass p;
            for (std::size_t i = 0; i < PicClass::kSize; ++i) {
                if (!v[i].is_number_integer()) throw std::invalid_argument("basis coordinates must be integers");
                p[i] = v[i].get<Int>();
            }
            basis.push_back(p);
        }
        out[*id] = std::move(basis);
    }
    return out;
}

VerificationReport run_verification(const VerifyOptions& options) {
    VerificationReport report;
    report.scope = options.scope ? class_name(*options.scope) : "all";
    Recorder rec(report);

    std::map<ClassId, ClassModel> overridden;
    std::set<ClassId> broken;
    for (const auto& [id, basis] : options.basis_overrides) {
        try {
            Sublattice lattice(basis);
            overridden.emplace(id, build_class_model(id, lattice));
        } catch (const std::invalid_argument&) {
            broken.insert(id);
        }
    }
    auto model = [&](ClassId id) -> const ClassModel& {
        auto it = overridden.find(id);
        return it == overridden.end() ? class_model(id) : it->second;
    };

    std::vector<ClassId> scope;
    if (options.scope) {
        scope.push_back(*options.scope);
    } else {
        for (const auto& c : deformation_classes()) scope.push_back(c.id);
    }
    // A fixture override is verified even when it lies outside the scope.
    for (const auto& [id, basis] : options.basis_overrides)
        if (std::find(scope.begin(), scope.end(), id) == scope.end()) scope.push_back(id);

    std::map<ClassId, ClassSums> sums;
    auto sums_of = [&](ClassId id) -> const ClassSums& {
        auto it = sums.find(id);
        if (it != sums.end()) return it->second;
        const auto& m = model(id);
        return sums[id] = {signed_sum(m, 1), signed_sum(m, 2)};
    };

    for (ClassId id : scope) {
        const auto& c = deformation_class(id);
        const std::string name = c.name;
        if (broken.count(id)) {
            rec.add("embedding/" + name + "/valid-basis", "table1", 1, 0);
            continue;
        }
        const auto& m = model(id);
        for (const auto& check : check_embedding(id, m.lambda))
            rec.add("embedding/" + name + "/" + check.name, "table1", 1, check.pass ? 1 : 0);

        const Int r = c.rank;
        const auto& dual = bertini_dual(c);
        const Int rd = dual.rank;
        rec.add("roots/" + name + "/count", "table1", expected_root_count(c.lambda_type),
                static_cast<Int>(m.roots.size()));
        const ClassSums& s = sums_of(id);
        rec.add("roots/" + name + "/signed-sum", "lines/2r", 2 * r, s.s1);
        rec.add("minus4/" + name + "/signed-sum", "table6/C4/2r(r-1)", 2 * r * (r - 1), s.s4);
        const Int c2 = s.s1 * (rd - r);
        const Int c0 = c0_formula(r);
        rec.add("c2/" + name, "table6/C2/4r(4-r)", 4 * r * (4 - r), c2, Provenance::CitedFormula);
        rec.add("theorem30/" + name, "theorem30", 30, c0 + c2 + s.s4, Provenance::CitedFormula);
        if (!broken.count(dual.id)) {
            const ClassSums& sd = sums_of(dual.id);
            const Int c2d = sd.s1 * (r - rd);
            rec.add("theorem96/" + name, "theorem96", 96, (c2 + 2 * s.s4) + (c2d + 2 * sd.s4), Provenance::CitedFormula);
            rec.add("lines/" + name + "/pair", "lines/16", 16, s.s1 + sd.s1);
        }
        rec.add("lines/" + name + "/euler", "lines/8", 8, s.s1 + (c.euler_char - 1));
        verify_pin(rec, m);
        if (r > 0) verify_wallcross(rec, m);
        if (id == ClassId::M2Connected) {
            const auto d = d6_split(m);
            rec.add("d6/" + name + "/doubled", "d6-split", 12, d.doubled_count);
            rec.add("d6/" + name + "/groups", "d6-split", 15, d.group_count);
            rec.add("d6/" + name + "/groups-qhat0", "d6-split", 9, d.groups_qhat0);
            rec.add("d6/" + name + "/groups-qhat2", "d6-split", 6, d.groups_qhat2);
            rec.add("d6/" + name + "/total", "d6-split", 60, d.total);
        }
    }

    const bool all = !options.scope.has_value();
    const bool e8 = all || *options.scope == ClassId::MConnected;
    const bool e7 = all || *options.scope == ClassId::M1Connected;
    if (e8 && !overridden.count(ClassId::MConnected) && !broken.count(ClassId::MConnected)) {
        const auto& m = model(ClassId::MConnected);
        record_table(rec, "table2", reference_table2(), to_reference_rows(root_levels(m), false));
        record_table(rec, "table3", reference_table3(), to_reference_rows(alpha_levels(m, 1, false), false));
        record_table(rec, "table4", reference_table4(), to_reference_rows(alpha_levels(m, 2, true), true));
        const auto n = normalize_code(Code::from_signs(0, {1, 1, -1, 1, -1, 1, -1, 1, -1}));
        rec.add("normalize/r0-seed", "code-normalization", 1, n.code == Code::all_plus(0) ? 1 : 0);
    }
    if (e7 && !overridden.count(ClassId::M1Connected) && !broken.count(ClassId::M1Connected)) {
        const auto& m = model(ClassId::M1Connected);
        record_table(rec, "table5", reference_table5(), to_reference_rows(alpha_levels(m, 2, true), true));
        Int bilevel_bad = 0;
        for (const auto& row : alpha_levels(m, 2, true))
            if (!row.bi_level || *row.qhat != (row.bi_level->first + row.bi_level->second) % 4) ++bilevel_bad;
        rec.add("table5/bi-level-rule", "table5", 0, bilevel_bad);
        const auto seed = Code::from_signs(1, {1, 1, -1, 1, -1, 1, -1});
        rec.add("normalize/r1-seed", "code-normalization", 1,
                cremona_path(seed, Code::all_minus(1)).has_value() ? 1 : 0);
    }
    if (all && broken.empty()) {
        const auto ref = reference_table6();
        const std::vector<std::pair<ClassId, ClassId>> columns = {
            {ClassId::MConnected, ClassId::MSplit},   {ClassId::M1Connected, ClassId::M1Split},
            {ClassId::M2Connected, ClassId::M2Split}, {ClassId::M3Connected, ClassId::M3Split},
            {ClassId::M4, ClassId::M4},               {ClassId::M2IKlein, ClassId::M2IKlein},
        };
        const auto names = table6_columns();
        for (const auto& row : table6_rows()) {
            for (std::size_t i = 0; i < names.size(); ++i) {
                const ClassId id = row.back() == '+' ? columns[i].first : columns[i].second;
                const auto& c = deformation_class(id);
                const Int r = c.rank;
                const ClassSums& s = sums_of(id);
                Int value = 0, closed = 0;
                Provenance p = Provenance::Enumerated;
                if (row.starts_with("C2")) {
                    value = s.s1 * (bertini_dual(c).rank - r);
                    closed = 4 * r * (4 - r);
                    p = Provenance::CitedFormula;
                } else if (row.starts_with("C4")) {
                    value = s.s4;
                    closed = 2 * r * (r - 1);
                } else {
                    value = c0_formula(r);
                    closed = 2 * (r - 3) * (r - 4) + 6;
                    p = Provenance::CitedFormula;
                }
                const std::string anchor = "table6/" + names[i] + "/" + row;
                rec.add(anchor, anchor, ref.at({row, names[i]}), value, p);
                rec.add(anchor + "/closed-form", anchor, closed, value, p);
            }
        }
        for (Int r = 0; r <= 8; ++r) {
            const Int rd = 8 - r;
            const std::string rs = "r=" + std::to_string(r);
            rec.add("identity/theorem30/" + rs, "theorem30", 30, c0_formula(r) + 4 * r * (4 - r) + 2 * r * (r - 1));
            rec.add("identity/theorem96/" + rs, "theorem96", 96,
                    (4 * r * (4 - r) + 4 * r * (r - 1)) + (4 * rd * (4 - rd) + 4 * rd * (rd - 1)));
            rec.add("identity/lines/" + rs, "lines/8", 8, 2 * r + (9 - 2 * r - 1));
            rec.add("identity/balance/" + rs, "table7/balance", 12,
                    (8 * (r - 1)) - 4 * (r - 1) - 2 * (r - rd));
        }
    }
    return report;
}

// Reference tables, transcribed row by row.

std::vector<ReferenceRow> reference_table2() {
    return {{0, {}, {}, 56, 2}, {1, {}, {}, 112, 0}, {2, {}, {}, 56, 2}, {3, {}, {}, 16, 0}};
}

std::vector<ReferenceRow> reference_table3() {
    return {{3, {}, {}, 8, 0},  {4, {}, {}, 28, 2}, {5, {}, {}, 56, 0}, {6, {}, {}, 56, 2},
            {7, {}, {}, 56, 0}, {8, {}, {}, 28, 2}, {9, {}, {}, 8, 0}};
}

std::vector<ReferenceRow> reference_table4() {
    return {
        {1, {1}, {}, 8, 2},
        {2, {1, 1, 1, 1}, {}, 70, 0},
        {3, {2, 1, 1, 1, 1, 1}, {}, 168, 2},
        {4, {2, 2, 2, 1, 1, 1, 1}, {}, 280, 0},
        {4, {3, 1, 1, 1, 1, 1, 1, 1}, {}, 8, 0},
        {5, {2, 2, 2, 2, 2, 2, 1}, {}, 56, 2},
        {5, {3, 2, 2, 2, 1, 1, 1, 1}, {}, 280, 2},
        {6, {3, 3, 2, 2, 2, 2, 1, 1}, {}, 420, 0},
        {7, {3, 3, 3, 3, 2, 2, 2, 1}, {}, 280, 2},
        {7, {4, 3, 2, 2, 2, 2, 2, 2}, {}, 56, 2},
        {8, {3, 3, 3, 3, 3, 3, 3, 1}, {}, 8, 0},
        {8, {4, 3, 3, 3, 3, 2, 2, 2}, {}, 280, 0},
        {9, {4, 4, 3, 3, 3, 3, 3, 2}, {}, 168, 2},
        {10, {4, 4, 4, 4, 3, 3, 3, 3}, {}, 70, 0},
        {11, {4, 4, 4, 4, 4, 4, 4, 3}, {}, 8, 2},
    };
}

std::vector<ReferenceRow> reference_table5() {
    return {
        {1, {1}, 0, 6, 2},
        {2, {1, 1, 1, 1}, 0, 15, 0},
        {2, {1, 1}, 1, 15, 2},
        {3, {2, 1, 1, 1, 1, 1}, 0, 6, 2},
        {3, {2, 1, 1, 1}, 1, 60, 0},
        {4, {2, 2, 2, 1, 1}, 1, 60, 2},
        {4, {2, 1, 1, 1, 1}, 2, 30, 0},
        {4, {3, 1, 1, 1, 1, 1}, 1, 6, 2},
        {5, {2, 2, 2, 2, 1}, 2, 30, 2},
        {5, {3, 2, 2, 2, 1, 1}, 1, 60, 0},
        {5, {3, 2, 1, 1, 1, 1}, 2, 30, 2},
        {6, {3, 3, 2, 2, 2, 2}, 1, 15, 2},
        {6, {3, 3, 2, 2, 1, 1}, 2, 90, 0},
        {6, {2, 2, 2, 2, 1, 1}, 3, 15, 2},
        {7, {3, 3, 3, 3, 2, 1}, 2, 30, 2},
        {7, {3, 3, 2, 2, 2, 1}, 3, 60, 0},
        {7, {4, 3, 2, 2, 2, 2}, 2, 30, 2},
        {8, {3, 3, 3, 3, 3, 1}, 3, 6, 2},
        {8, {4, 3, 3, 3, 3, 2}, 2, 30, 0},
        {8, {4, 3, 3, 2, 2, 2}, 3, 60, 2},
        {9, {4, 4, 3, 3, 3, 2}, 3, 60, 0},
        {9, {3, 3, 3, 3, 3, 2}, 4, 6, 2},
        {10, {4, 4, 4, 4, 3, 3}, 3, 15, 2},
        {10, {4, 4, 3, 3, 3, 3}, 4, 15, 0},
        {11, {4, 4, 4, 4, 4, 3}, 4, 6, 2},
    };
}

std::map<std::pair<std::string, std::string>, Int> reference_table6() {
    const std::vector<std::string> cols = table6_columns();
    const std::map<std::string, std::vector<Int>> rows = {
        {"C2+", {-128, -84, -48, -20, 0, 0}}, {"C2-", {0, 12, 16, 12, 0, 0}},
        {"C4+", {112, 84, 60, 40, 24, 24}},   {"C4-", {0, 0, 4, 12, 24, 24}},
        {"C0+", {46, 30, 18, 10, 6, 6}},      {"C0-", {30, 18, 10, 6, 6, 6}},
    };
    std::map<std::pair<std::string, std::string>, Int> out;
    for (const auto& [row, values] : rows)
        for (std::size_t i = 0; i < cols.size(); ++i) out[{row, cols[i]}] = values[i];
    return out;
}

std::vector<ReferenceRow> to_reference_rows(const std::vector<LevelRow>& rows, bool keep_pattern) {
    std::vector<ReferenceRow> out;
    for (const auto& r : rows)
        out.push_back({r.level.value_or(0), keep_pattern ? r.pattern : std::vector<Int>{}, r.pair_coeff, r.count,
                       r.qhat.value_or(-1)});
    return out;
}

// Rendering.

std::optional<Format> parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "md") return Format::Markdown;
    return std::nullopt;
}

namespace {

ordered_json cell_json(const TableCell& c) {
    if (!c.numeric) return c.text;
    if (!c.provenance && c.anchor.empty()) return c.number;
    ordered_json j;
    j["value"] = c.number;
    if (c.provenance) j["provenance"] = to_string(*c.provenance);
    if (!c.anchor.empty()) j["anchor"] = c.anchor;
    return j;
}

ordered_json doc_json(const TableDocument& d) {
    ordered_json j;
    j["name"] = d.name;
    j["title"] = d.title;
    j["columns"] = d.columns;
    ordered_json rows = ordered_json::array();
    for (const auto& row : d.rows) {
        ordered_json r;
        for (std::size_t i = 0; i < d.columns.size(); ++i) r[d.columns[i]] = cell_json(row[i]);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string cell_text(const TableCell& c) { return c.numeric ? std::to_string(c.number) : c.text; }

std::string render_csv(const TableDocument& d) {
    std::ostringstream os;
    for (std::size_t i = 0; i < d.columns.size(); ++i) os << (i ? "," : "") << csv_escape(d.columns[i]);
    os << '\n';
    for (const auto& row : d.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(cell_text(row[i]));
        os << '\n';
    }
    return os.str();
}

std::string render_md(const TableDocument& d) {
    std::ostringstream os;
    os << "### " << d.title << "\n\n|";
    for (const auto& c : d.columns) os << ' ' << c << " |";
    os << "\n|";
    for (std::size_t i = 0; i < d.columns.size(); ++i) os << "---|";
    os << '\n';
    for (const auto& row : d.rows) {
        os << '|';
        for (const auto& c : row) os << ' ' << cell_text(c) << " |";
        os << '\n';
    }
    return os.str();
}

}  // namespace

std::string render(const TableDocument& doc, Format format) {
    switch (format) {
        case Format::Json: return doc_json(doc).dump(2) + "\n";
        case Format::Csv: return render_csv(doc);
        case Format::Markdown: return render_md(doc);
    }
    return {};
}

std::string render(const std::vector<TableDocument>& docs, Format format) {
    if (docs.size() == 1) return render(docs.front(), format);
    if (format == Format::Json) {
        ordered_json arr = ordered_json::array();
        for (const auto& d : docs) arr.push_back(doc_json(d));
        return arr.dump(2) + "\n";
    }
    std::string out;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        if (i) out += '\n';
        if (format == Format::Csv) out += "# " + docs[i].name + "\n";
        out += render(docs[i], format);
    }
    return out;
}

void to_json(nlohmann::json& j, const VerificationRecord& r) {
    j = nlohmann::json{{"check", r.check},       {"anchor", r.anchor}, {"expected", r.expected},
                       {"provenance", to_string(r.provenance)}, {"actual", r.actual}, {"pass", r.pass}};
}

void from_json(const nlohmann::json& j, VerificationRecord& r) {
    j.at("check").get_to(r.check);
    j.at("anchor").get_to(r.anchor);
    j.at("expected").get_to(r.expected);
    j.at("actual").get_to(r.actual);
    j.at("pass").get_to(r.pass);
    const auto p = j.at("provenance").get<std::string>();
    if (p == "enumerated") {
        r.provenance = Provenance::Enumerated;
    } else if (p == "cited-formula") {
        r.provenance = Provenance::CitedFormula;
    } else {
        throw std::invalid_argument("unknown provenance " + p);
    }
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
    j = nlohmann::json{{"scope", r.scope}, {"pass", r.all_pass()}, {"failed", r.failed()}, {"records", r.records}};
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
    j.at("scope").get_to(r.scope);
    j.at("records").get_to(r.records);
}

std::string render(const VerificationReport& report, Format format) {
    if (format == Format::Json) {
        ordered_json j;
        j["scope"] = report.scope;
        j["pass"] = report.all_pass();
        j["failed"] = report.failed();
        ordered_json recs = ordered_json::array();
        for (const auto& r : report.records) {
            ordered_json o;
            o["check"] = r.check;
            o["anchor"] = r.anchor;
            o["expected"] = r.expected;
            o["provenance"] = to_string(r.provenance);
            o["actual"] = r.actual;
            o["pass"] = r.pass;
            recs.push_back(std::move(o));
        }
        j["records"] = std::move(recs);
        return j.dump(2) + "\n";
    }
    TableDocument d{"verify", "Verification (" + report.scope + ")",
                    {"check", "anchor", "expected", "provenance", "actual", "pass"}, {}};
    for (const auto& r : report.records)
        d.rows.push_back({TableCell::label(r.check), TableCell::label(r.anchor), TableCell::value(r.expected),
                          TableCell::label(to_string(r.provenance)), TableCell::value(r.actual),
                          TableCell::label(r.pass ? "pass" : "FAIL")});
    std::string out = render(d, format);
    if (format == Format::Markdown)
        out += "\n" + std::to_string(report.records.size() - report.failed()) + "/" +
               std::to_string(report.records.size()) + " checks passed\n";
    return out;
}

// Table builders.

TableDocument classes_table() {
    TableDocument d{"classes", "Real deformation classes",
                    {"class", "topology", "smith_type", "lambda", "rank", "euler_char", "dual"}, {}};
    for (const auto& c : deformation_classes())
        d.rows.push_back({TableCell::label(c.name), TableCell::label(c.topology), TableCell::label(c.smith_type),
                          TableCell::label(c.lambda_type), TableCell::value(c.rank), TableCell::value(c.euler_char),
                          TableCell::label(bertini_dual(c).name)});
    return d;
}

TableDocument pairs_table() {
    TableDocument d{"pairs", "Bertini pairs",
                    {"smith_type", "plus", "minus", "lambda_plus", "lambda_minus", "rank_sum"}, {}};
    for (const auto& [a, b] : bertini_pairs()) {
        const auto& p = deformation_class(a);
        const auto& m = deformation_class(b);
        d.rows.push_back({TableCell::label(p.smith_type), TableCell::label(p.name), TableCell::label(m.name),
                          TableCell::label(p.lambda_type), TableCell::label(m.lambda_type),
                          TableCell::value(p.rank + m.rank)});
    }
    return d;
}

TableDocument enumerate_table(ClassId id, int stratum) {
    if (stratum != 0 && stratum != 2 && stratum != 4) throw std::invalid_argument("stratum must be 0, 2 or 4");
    const auto& m = class_model(id);
    TableDocument d{"enumerate", "B^" + std::to_string(stratum) + " of " + class_name(id),
                    {"class", "stratum", "alpha", "v", "qhat", "weight"}, {}};
    for (const auto& b : b_classes(m, stratum / 2))
        d.rows.push_back({TableCell::label(class_name(id)), TableCell::value(stratum),
                          TableCell::label(b.alpha.to_string()), TableCell::label(b.v.to_string()),
                          TableCell::value(b.qhat.value()), TableCell::value(i_power(b.qhat))});
    return d;
}

TableDocument published_table(int n, std::optional<ClassId> id) {
    auto e8 = [] () -> const ClassModel& { return class_model(ClassId::MConnected); };
    auto simple_rows = [](TableDocument& d, const std::vector<LevelRow>& rows) {
        for (const auto& r : rows)
            d.rows.push_back({TableCell::value(*r.level), TableCell::value(r.count, Provenance::Enumerated,
                                                                           d.name + "/" + std::to_string(*r.level)),
                              TableCell::value(*r.qhat)});
    };
    switch (n) {
        case 2: {
            TableDocument d{"table2", "Roots of E8 by level", {"level", "count", "qhat"}, {}};
            simple_rows(d, root_levels(e8()));
            return d;
        }
        case 3: {
            TableDocument d{"table3", "B^2 of E8 by level", {"level", "count", "qhat"}, {}};
            simple_rows(d, alpha_levels(e8(), 1, false));
            return d;
        }
        case 4: {
            TableDocument d{"table4", "B^4 of E8 by level and pattern", {"level", "pattern", "count", "qhat"}, {}};
            for (const auto& r : alpha_levels(e8(), 2, true))
                d.rows.push_back({TableCell::value(*r.level), TableCell::label(pattern_text(r.pattern)),
                                  TableCell::value(r.count, Provenance::Enumerated, "table4/" + std::to_string(*r.level)),
                                  TableCell::value(*r.qhat)});
            return d;
        }
        case 5: {
            TableDocument d{"table5",
                            "Real B^4 of E7 by level, real pattern and pair coefficient",
                            {"level", "real_pattern", "pair_coeff", "bi_level", "count", "qhat"},
                            {}};
            for (const auto& r : alpha_levels(class_model(ClassId::M1Connected), 2, true))
                d.rows.push_back({TableCell::value(*r.level), TableCell::label(pattern_text(r.pattern)),
                                  TableCell::value(*r.pair_coeff),
                                  TableCell::label("(" + std::to_string(r.bi_level->first) + "," +
                                                   std::to_string(r.bi_level->second) + ")"),
                                  TableCell::value(r.count, Provenance::Enumerated, "table5/" + std::to_string(*r.level)),
                                  TableCell::value(*r.qhat)});
            return d;
        }
        case 6: {
            TableDocument d{"table6", "Signed sums per Bertini pair", {"row"}, {}};
            for (const auto& c : table6_columns()) d.columns.push_back(snake(c));
            const auto cells = table6();
            for (const auto& row : table6_rows()) {
                std::vector<TableCell> out{TableCell::label(row)};
                for (const auto& c : cells)
                    if (c.row == row)
                        out.push_back(TableCell::value(c.value, c.provenance, "table6/" + c.column + "/" + c.row));
                d.rows.push_back(std::move(out));
            }
            return d;
        }
        case 7: {
            TableDocument d{"table7", "Edge-count differences at a vanishing root", {"delta", "formula"}, {}};
            std::vector<std::pair<ClassId, DeltaTable>> cols;
            for (const auto& c : deformation_classes()) {
                if (c.rank == 0 || (id && *id != c.id)) continue;
                const auto& m = class_model(c.id);
                const auto es = vanishing_roots(m);
                if (es.empty()) continue;
                cols.emplace_back(c.id, delta_table(m, es.front()));
                d.columns.push_back(snake(c.name));
            }
            const std::vector<std::pair<std::string, std::string>> labels = {
                {"(4,1)", "0"}, {"(4,2)", "4(r-1)"}, {"(2,0)", "-4(r-1)"}, {"(2,1)", "0"}, {"(2,2)", "-2(r-r_dual)"}};
            for (std::size_t i = 0; i < labels.size(); ++i) {
                std::vector<TableCell> row{TableCell::label(labels[i].first), TableCell::label(labels[i].second)};
                for (const auto& [cid, t] : cols) {
                    const Int vals[] = {t.d41, t.d42, t.d20, t.d21, t.d22};
                    const Provenance p = i == 4 ? Provenance::CitedFormula : Provenance::Enumerated;
                    row.push_back(TableCell::value(vals[i], p, "table7/" + class_name(cid) + "/" + labels[i].first));
                }
                d.rows.push_back(std::move(row));
            }
            return d;
        }
        default: throw std::invalid_argument("table number must be in 2..7");
    }
}

TableDocument wallcross_table(ClassId id, std::optional<int> stratum) {
    const auto& m = class_model(id);
    TableDocument d{"wallcross", "Limit splittings for " + class_name(id),
                    {"class", "stratum", "v_dot_e", "instances", "cases", "reference", "match"}, {}};
    auto describe = [](Int r, Int d2, Int de, int ds) {
        return "r=" + std::to_string(r) + " D2=" + std::to_string(d2) + " DE=" + std::to_string(de) +
               (ds < 0 ? std::string(" other") : " B" + std::to_string(ds));
    };
    struct Acc {
        Int instances = 0;
        std::set<std::string> seen;
        bool match = true;
    };
    std::map<std::pair<int, Int>, Acc> acc;
    const auto es = vanishing_roots(m);
    for (int k = 0; k <= 2; ++k) {
        if (stratum && *stratum != 2 * k) continue;
        const auto bs = b_classes(m, k);
        for (const auto& e : es) {
            for (const auto& b : bs) {
                const Int t = intersect(b.v, e.e);
                auto& a = acc[{2 * k, t}];
                ++a.instances;
                const auto got = splittings(m, b, e);
                const auto ref = reference_splittings(2 * k, t);
                std::string text, want;
                for (const auto& c : got) text += (text.empty() ? "" : "; ") + describe(c.r, c.d_square, c.d_dot_e, c.d_stratum);
                for (const auto& c : ref) want += (want.empty() ? "" : "; ") + describe(c.r, c.d_square, c.d_dot_e, c.d_stratum);
                a.seen.insert(text.empty() ? "none" : text);
                if (text != want) a.match = false;
            }
        }
    }
    for (const auto& [key, a] : acc) {
        std::string cases;
        for (const auto& s : a.seen) cases += (cases.empty() ? "" : " | ") + s;
        std::string want;
        for (const auto& c : reference_splittings(key.first, key.second))
            want += (want.empty() ? "" : "; ") + describe(c.r, c.d_square, c.d_dot_e, c.d_stratum);
        d.rows.push_back({TableCell::label(class_name(id)), TableCell::value(key.first), TableCell::value(key.second),
                          TableCell::value(a.instances), TableCell::label(cases),
                          TableCell::label(want.empty() ? "none" : want), TableCell::value(a.match ? 1 : 0)});
    }
    return d;
}

}  // namespace dp1
