#pragma once

// The class sets B^0, B^2, B^4 of a real deformation class, their signed
// sums, and the level tables and totals built from them.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dp1/lattice.hpp"
#include "dp1/pin.hpp"
#include "dp1/real_forms.hpp"

namespace dp1 {

/// Everything the counts need about one class: its lattice, its q-hat model
/// and the enumerated roots and (-4)-vectors of the lattice.
struct ClassModel {
    ClassId id;
    Sublattice lambda;
    PinModel pin;
    std::vector<PicClass> roots;
    std::vector<PicClass> minus4;

    const DeformationClass& info() const { return deformation_class(id); }
    QhatValue qhat(const PicClass& x) const { return dp1::qhat(pin, x); }
};

/// Code model for the two connected top classes (all +1 with r = 0, all -1
/// with r = 1), vanishing-basis model on `lambda` otherwise.
ClassModel build_class_model(ClassId id, const Sublattice& lambda);

/// Same, with an explicit q-hat model.
ClassModel build_class_model(ClassId id, const Sublattice& lambda, PinModel pin);

/// Cached model on the stored embedding.
const ClassModel& class_model(ClassId id);

struct BClass {
    PicClass alpha;  // -2K - v
    PicClass v;
    int stratum = 0;  // v.v == -stratum
    QhatValue qhat;
};

/// B^{2k} for k in {0, 1, 2}.  For code models q-hat is evaluated on alpha
/// directly; otherwise it is q-hat(v), since q-hat(-2K) = 0 and -2K is
/// orthogonal to v.
std::vector<BClass> b_classes(const ClassModel& model, int k);

/// q-hat of alpha = -2K - v by the same rule as b_classes.
QhatValue qhat_alpha(const ClassModel& model, const PicClass& alpha);

/// Sum of i^{q-hat} over B^{2k}, k in {1, 2}.  Throws InvariantViolation on an
/// odd q-hat.
Int signed_sum(const ClassModel& model, int k);
Int signed_sum(ClassId id, int k);

/// signed_sum(., 1) times (r_dual - r); the second factor is the cited
/// Euler-characteristic sum.
Int c2_total(ClassId id);

/// Cited closed form 2(r-3)(r-4)+6.
Int c0_total(ClassId id);
Int c0_formula(Int r);

Int theorem30(ClassId id);
Int theorem96(ClassId id);

/// (sum over roots of c and of its dual, sum over roots of c + chi - 1).
std::pair<Int, Int> lines_identities(ClassId id);

struct LevelRow {
    std::optional<Int> level;  // nullopt on an aggregate row
    std::vector<Int> pattern;  // negated real exceptional coefficients, sorted descending, zeros dropped
    std::optional<Int> pair_coeff;
    std::optional<std::pair<int, int>> bi_level;
    Int count = 0;
    std::optional<int> qhat;  // the constant value on the row; nullopt on an aggregate row
    Int signed_sum = 0;
};

/// Roots of a code model grouped by |h-coefficient|.
std::vector<LevelRow> root_levels(const ClassModel& model);

/// B^{2k} grouped by the h-coefficient of alpha; with `detailed` also by the
/// exceptional pattern and (for r > 0) the imaginary pair coefficient.
std::vector<LevelRow> alpha_levels(const ClassModel& model, int k, bool detailed);

/// The level tables: E8 k=1 gives root levels, E8 k=2 and E7 give detailed
/// alpha levels, other classes one aggregate row.  Throws InvariantViolation
/// when q-hat is not constant on a row.
std::vector<LevelRow> classify_levels(ClassId id, int k);

enum class Provenance { Enumerated, CitedFormula };
std::string to_string(Provenance p);

struct Table6Cell {
    std::string row;     // "C2+", "C2-", "C4+", "C4-", "C0+", "C0-"
    std::string column;  // "M", "M-1", "M-2", "M-3", "M-4", "(M-2)_I"
    ClassId id;
    Int value = 0;
    Int closed_form = 0;  // 4r(4-r), 2r(r-1) or 2(r-3)(r-4)+6
    Provenance provenance = Provenance::Enumerated;
};

std::vector<std::string> table6_columns();
std::vector<std::string> table6_rows();
/// Row-major, 6 x 6.
std::vector<Table6Cell> table6();

/// The (-4)-vectors of the D6 class split into the 12 vectors of the form
/// +-2e_i and 15 groups of 16 (grouped by the +-2e_i orthogonal to them).
struct D6Split {
    Int doubled_count = 0;
    Int doubled_signed_sum = 0;
    Int group_count = 0;
    Int group_size = 0;
    Int groups_qhat0 = 0;
    Int groups_qhat2 = 0;
    Int total = 0;  // doubled_signed_sum + group_size * (groups_qhat0 - groups_qhat2)
};

D6Split d6_split(const ClassModel& model);

}  // namespace dp1
