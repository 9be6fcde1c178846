#include "dp1/counting.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "dp1/errors.hpp"

namespace dp1 {

namespace {

PinModel default_pin(ClassId id, const Sublattice& lambda) {
    if (id == ClassId::MConnected) return Code::all_plus(0);
    if (id == ClassId::M1Connected) return Code::all_minus(1);
    return VanishingBasis{lambda};
}

int model_pairs(const ClassModel& model) {
    if (const auto* c = std::get_if<Code>(&model.pin)) return c->pairs();
    return 0;
}

const PicClass kMinus2K = Int{-2} * PicClass::canonical();

using RowKey = std::tuple<Int, Int, std::vector<Int>>;  // level, pair coefficient, pattern

std::vector<LevelRow> finish_rows(const std::map<RowKey, LevelRow>& grouped) {
    std::vector<LevelRow> out;
    for (const auto& [key, row] : grouped) out.push_back(row);
    return out;
}

void add_to_row(LevelRow& row, QhatValue q, const std::string& where) {
    if (row.count == 0) {
        row.qhat = q.value();
    } else if (row.qhat != q.value()) {
        throw InvariantViolation("q-hat is not constant on " + where);
    }
    ++row.count;
    row.signed_sum += i_power(q);
}

}  // namespace

ClassModel build_class_model(ClassId id, const Sublattice& lambda) {
    return build_class_model(id, lambda, default_pin(id, lambda));
}

ClassModel build_class_model(ClassId id, const Sublattice& lambda, PinModel pin) {
    ClassModel m{id, lambda, std::move(pin), {}, {}};
    if (lambda.rank() > 0) {
        m.roots = enumerate_vectors(lambda, -2);
        m.minus4 = enumerate_vectors(lambda, -4);
    }
    return m;
}

const ClassModel& class_model(ClassId id) {
    static std::once_flag once;
    static std::vector<ClassModel> cache;
    std::call_once(once, [] {
        for (const auto& c : deformation_classes()) cache.push_back(build_class_model(c.id, lambda_basis(c.id).sublattice));
    });
    return cache[static_cast<std::size_t>(id)];
}

QhatValue qhat_alpha(const ClassModel& model, const PicClass& alpha) {
    if (std::holds_alternative<Code>(model.pin)) return model.qhat(alpha);
    return model.qhat(kMinus2K - alpha);
}

std::vector<BClass> b_classes(const ClassModel& model, int k) {
    if (k < 0 || k > 2) throw std::invalid_argument("stratum index k must be 0, 1 or 2");
    auto make = [&](const PicClass& v) {
        const PicClass alpha = kMinus2K - v;
        return BClass{alpha, v, 2 * k, qhat_alpha(model, alpha)};
    };
    std::vector<BClass> out;
    if (k == 0) {
        out.push_back(make(PicClass{}));
    } else {
        for (const auto& v : k == 1 ? model.roots : model.minus4) out.push_back(make(v));
    }
    return out;
}

Int signed_sum(const ClassModel& model, int k) {
    if (k != 1 && k != 2) throw std::invalid_argument("signed_sum is defined for k = 1 and k = 2");
    Int s = 0;
    for (const auto& b : b_classes(model, k)) s += i_power(b.qhat);
    return s;
}

Int signed_sum(ClassId id, int k) { return signed_sum(class_model(id), k); }

Int c2_total(ClassId id) {
    const auto& c = deformation_class(id);
    return signed_sum(id, 1) * (bertini_dual(c).rank - c.rank);
}

Int c0_formula(Int r) { return 2 * (r - 3) * (r - 4) + 6; }

Int c0_total(ClassId id) { return c0_formula(deformation_class(id).rank); }

Int theorem30(ClassId id) { return c0_total(id) + c2_total(id) + signed_sum(id, 2); }

Int theorem96(ClassId id) {
    const ClassId dual = deformation_class(id).dual;
    return (c2_total(id) + 2 * signed_sum(id, 2)) + (c2_total(dual) + 2 * signed_sum(dual, 2));
}

std::pair<Int, Int> lines_identities(ClassId id) {
    const auto& c = deformation_class(id);
    const Int own = signed_sum(id, 1);
    return {own + signed_sum(c.dual, 1), own + (c.euler_char - 1)};
}

std::vector<LevelRow> root_levels(const ClassModel& model) {
    std::map<RowKey, LevelRow> grouped;
    for (const auto& e : model.roots) {
        const Int level = e[0] < 0 ? -e[0] : e[0];
        auto& row = grouped[{level, 0, {}}];
        row.level = level;
        add_to_row(row, model.qhat(e), "root level " + std::to_string(level));
    }
    return finish_rows(grouped);
}

std::vector<LevelRow> alpha_levels(const ClassModel& model, int k, bool detailed) {
    const int pairs = model_pairs(model);
    const int real = 8 - 2 * pairs;
    std::map<RowKey, LevelRow> grouped;
    for (const auto& b : b_classes(model, k)) {
        const Int level = b.alpha[0];
        std::vector<Int> pattern;
        Int pair = 0;
        int odd = 0;
        if (detailed) {
            for (int i = 1; i <= real; ++i) {
                const Int c = -b.alpha[static_cast<std::size_t>(i)];
                if (c % 2 != 0) ++odd;
                if (c != 0) pattern.push_back(c);
            }
            std::sort(pattern.rbegin(), pattern.rend());
            if (pairs > 0) pair = -b.alpha[8];
        }
        auto& row = grouped[{level, pair, pattern}];
        row.level = level;
        if (detailed) {
            row.pattern = pattern;
            if (pairs > 0) {
                row.pair_coeff = pair;
                row.bi_level = std::make_pair(static_cast<int>(((level % 2) + 2) % 2), odd);
            }
        }
        add_to_row(row, b.qhat, "level " + std::to_string(level));
    }
    return finish_rows(grouped);
}

std::vector<LevelRow> classify_levels(ClassId id, int k) {
    const auto& m = class_model(id);
    if (id == ClassId::MConnected && k == 1) return root_levels(m);
    if (id == ClassId::MConnected || id == ClassId::M1Connected) return alpha_levels(m, k, true);
    LevelRow agg;
    for (const auto& b : b_classes(m, k)) {
        ++agg.count;
        agg.signed_sum += i_power(b.qhat);
    }
    return {agg};
}

std::string to_string(Provenance p) { return p == Provenance::Enumerated ? "enumerated" : "cited-formula"; }

std::vector<std::string> table6_columns() { return {"M", "M-1", "M-2", "M-3", "M-4", "(M-2)_I"}; }

std::vector<std::string> table6_rows() { return {"C2+", "C2-", "C4+", "C4-", "C0+", "C0-"}; }

std::vector<Table6Cell> table6() {
    const std::vector<std::pair<ClassId, ClassId>> columns = {
        {ClassId::MConnected, ClassId::MSplit},   {ClassId::M1Connected, ClassId::M1Split},
        {ClassId::M2Connected, ClassId::M2Split}, {ClassId::M3Connected, ClassId::M3Split},
        {ClassId::M4, ClassId::M4},               {ClassId::M2IKlein, ClassId::M2IKlein},
    };
    const auto names = table6_columns();
    std::vector<Table6Cell> out;
    for (const auto& row : table6_rows()) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            const ClassId id = row.back() == '+' ? columns[c].first : columns[c].second;
            const Int r = deformation_class(id).rank;
            Table6Cell cell{row, names[c], id, 0, 0, Provenance::Enumerated};
            if (row.starts_with("C2")) {
                cell.value = c2_total(id);
                cell.closed_form = 4 * r * (4 - r);
                cell.provenance = Provenance::CitedFormula;
            } else if (row.starts_with("C4")) {
                cell.value = signed_sum(id, 2);
                cell.closed_form = 2 * r * (r - 1);
            } else {
                cell.value = c0_total(id);
                cell.closed_form = c0_formula(r);
                cell.provenance = Provenance::CitedFormula;
            }
            out.push_back(cell);
        }
    }
    return out;
}

D6Split d6_split(const ClassModel& model) {
    // +-2e_i pairs with 20 roots to +-2; the +-e_a+-e_b+-e_c+-e_d only with 12.
    auto pairing_two = [&](const PicClass& v) {
        return std::count_if(model.roots.begin(), model.roots.end(), [&](const PicClass& e) {
            const Int d = intersect(v, e);
            return d == 2 || d == -2;
        });
    };
    std::vector<PicClass> doubled, rest;
    for (const auto& v : model.minus4) (pairing_two(v) == 20 ? doubled : rest).push_back(v);
    D6Split s;
    s.doubled_count = static_cast<Int>(doubled.size());
    for (const auto& v : doubled) s.doubled_signed_sum += i_power(model.qhat(v));
    std::map<std::vector<PicClass>, std::vector<PicClass>> groups;
    for (const auto& v : rest) {
        std::vector<PicClass> key;
        for (const auto& d : doubled)
            if (intersect(v, d) == 0) key.push_back(d);
        groups[key].push_back(v);
    }
    s.group_count = static_cast<Int>(groups.size());
    for (const auto& [key, members] : groups) {
        s.group_size = std::max<Int>(s.group_size, static_cast<Int>(members.size()));
        std::set<int> values;
        for (const auto& v : members) values.insert(model.qhat(v).value());
        if (values.size() != 1) throw InvariantViolation("q-hat is not constant on a D6 group");
        (*values.begin() == 0 ? s.groups_qhat0 : s.groups_qhat2) += 1;
    }
    s.total = s.doubled_signed_sum + s.group_size * (s.groups_qhat0 - s.groups_qhat2);
    return s;
}

}  // namespace dp1
