#pragma once

// Lattice side of the wall-crossing analysis: vanishing roots, limit
// splittings alpha = D + rE, orthogonal root sums, the reflection pairing
// and the table of edge-count differences.

#include <string>
#include <vector>

#include "dp1/counting.hpp"

namespace dp1 {

struct VanishingRoot {
    ClassId class_id;
    PicClass e;
};

/// Throws std::invalid_argument unless e.e = -2, e.K = 0, e is in Lambda
/// and q-hat(e) = 0.
VanishingRoot make_vanishing_root(const ClassModel& model, const PicClass& e);

/// Roots of Lambda with q-hat = 0.
std::vector<VanishingRoot> vanishing_roots(const ClassModel& model);

struct SplittingCase {
    Int r = 0;
    PicClass d;
    Int d_square = 0;
    Int d_dot_e = 0;
    int d_stratum = -1;  // 0, 2 or 4 when -2K - D lies in that B-set, -1 otherwise
};

/// All r in 1..4 with D = alpha - rE passing D.(-K-E) >= 0, D.E >= 1,
/// D.D >= -1, and D.D >= 0 when alpha is in B^4.  Throws
/// std::invalid_argument if E belongs to another class or alpha is not in
/// B^0, B^2 or B^4 of the model.
std::vector<SplittingCase> splittings(const ClassModel& model, const BClass& alpha, const VanishingRoot& e);

struct ExpectedSplitting {
    Int r;
    Int d_square;
    Int d_dot_e;
    int d_stratum;
};

/// The splitting tables as a function of (stratum of alpha, v.E).
std::vector<ExpectedSplitting> reference_splittings(int stratum, Int v_dot_e);

/// Sum of i^{q-hat(e)} over roots e of Lambda orthogonal to E.
Int orth_root_sum(const ClassModel& model, const VanishingRoot& e);

/// Sum of i^{q-hat(alpha)} over alpha in B^{2k} with |alpha.E| = 1 (zero
/// when the pairing works).  Checks
/// elementwise that reflection in E maps this set to itself with q-hat
/// shifted by 2, and fixes q-hat when alpha.E is 0 or +-2; throws
/// InvariantViolation otherwise.
Int pairing_cancellation(const ClassModel& model, const VanishingRoot& e, int k);

struct DeltaTable {
    Int d41 = 0;  // pairing cancellation on B^4
    Int d42 = 0;  // 2 * orth_root_sum
    Int d20 = 0;  // -2 * orth_root_sum
    Int d21 = 0;  // pairing cancellation on B^2
    Int d22 = 0;  // -2(r - r_dual), cited Euler-characteristic input

    Int c4_part() const { return d41 + d42; }
    Int c2_part() const { return d20 + d21 + d22; }
    Int weighted_balance() const { return c2_part() + 2 * c4_part(); }
};

DeltaTable delta_table(const ClassModel& model, const VanishingRoot& e);

/// The table's closed forms at rank r: (0, 4(r-1), -4(r-1), 0, -2(r - r_dual)).
DeltaTable delta_formulas(Int r, Int r_dual);

}  // namespace dp1
