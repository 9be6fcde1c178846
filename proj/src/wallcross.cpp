#include "dp1/wallcross.hpp"

#include <stdexcept>

#include "dp1/errors.hpp"

namespace dp1 {

namespace {

const PicClass kMinus2K = Int{-2} * PicClass::canonical();

int stratum_of(const PicClass& w) {
    const Int s = -square(w);
    return (s == 0 || s == 2 || s == 4) ? static_cast<int>(s) : -1;
}

}  // namespace

VanishingRoot make_vanishing_root(const ClassModel& model, const PicClass& e) {
    if (square(e) != -2) throw std::invalid_argument("vanishing root must have square -2: " + e.to_string());
    if (intersect(e, PicClass::canonical()) != 0) throw std::invalid_argument("vanishing root not in K-perp: " + e.to_string());
    if (!model.lambda.contains(e)) throw std::invalid_argument("vanishing root not in Lambda: " + e.to_string());
    if (model.qhat(e).value() != 0) throw std::invalid_argument("root with q-hat != 0 is not a vanishing root: " + e.to_string());
    return {model.id, e};
}

std::vector<VanishingRoot> vanishing_roots(const ClassModel& model) {
    std::vector<VanishingRoot> out;
    for (const auto& e : model.roots)
        if (model.qhat(e).value() == 0) out.push_back({model.id, e});
    return out;
}

std::vector<SplittingCase> splittings(const ClassModel& model, const BClass& alpha, const VanishingRoot& e) {
    if (e.class_id != model.id) throw std::invalid_argument("vanishing root belongs to a different class");
    const PicClass v = kMinus2K - alpha.alpha;
    const int stratum = stratum_of(v);
    if (stratum < 0 || (stratum > 0 && !model.lambda.contains(v)))
        throw std::invalid_argument("class is not in B^0, B^2 or B^4 of this model: " + alpha.alpha.to_string());
    const PicClass minus_k_minus_e = -PicClass::canonical() - e.e;
    std::vector<SplittingCase> out;
    for (Int r = 1; r <= 4; ++r) {
        const PicClass d = alpha.alpha - r * e.e;
        const Int d2 = square(d);
        const Int de = intersect(d, e.e);
        if (intersect(d, minus_k_minus_e) < 0 || de < 1 || d2 < -1) continue;
        if (stratum == 4 && d2 < 0) continue;
        out.push_back({r, d, d2, de, stratum_of(kMinus2K - d)});
    }
    return out;
}

std::vector<ExpectedSplitting> reference_splittings(int stratum, Int v_dot_e) {
    if (stratum == 0) return {{1, 2, 2, 2}};
    if (stratum == 2) {
        if (v_dot_e == 2) return {{2, 2, 2, 2}};
        if (v_dot_e == 1) return {{1, 2, 1, 2}};
        if (v_dot_e == 0) return {{1, 0, 2, 4}};
        return {};
    }
    if (stratum == 4) {
        if (v_dot_e == 2) return {{2, 0, 2, 4}};
        if (v_dot_e == 1) return {{1, 0, 1, 4}};
        return {};
    }
    throw std::invalid_argument("stratum must be 0, 2 or 4");
}

Int orth_root_sum(const ClassModel& model, const VanishingRoot& e) {
    Int s = 0;
    for (const auto& x : model.roots)
        if (intersect(x, e.e) == 0) s += i_power(model.qhat(x));
    return s;
}

Int pairing_cancellation(const ClassModel& model, const VanishingRoot& e, int k) {
    Int s = 0;
    for (const auto& b : b_classes(model, k)) {
        const Int m = intersect(b.alpha, e.e);
        const PicClass image = reflect(b.alpha, e.e);
        const QhatValue qi = qhat_alpha(model, image);
        if (m == 1 || m == -1) {
            if (!model.lambda.contains(kMinus2K - image) || intersect(image, e.e) != -m)
                throw InvariantViolation("reflection leaves the paired set at " + b.alpha.to_string());
            if (qi != b.qhat + QhatValue(2))
                throw InvariantViolation("reflection does not shift q-hat by 2 at " + b.alpha.to_string());
            s += i_power(b.qhat);
        } else if (qi != b.qhat) {
            throw InvariantViolation("reflection changes q-hat at " + b.alpha.to_string());
        }
    }
    return s;
}

DeltaTable delta_table(const ClassModel& model, const VanishingRoot& e) {
    const auto& c = model.info();
    const Int orth = orth_root_sum(model, e);
    DeltaTable t;
    t.d41 = pairing_cancellation(model, e, 2);
    t.d42 = 2 * orth;
    t.d20 = -2 * orth;
    t.d21 = pairing_cancellation(model, e, 1);
    t.d22 = -2 * (c.rank - bertini_dual(c).rank);
    return t;
}

DeltaTable delta_formulas(Int r, Int r_dual) { return {0, 4 * (r - 1), -4 * (r - 1), 0, -2 * (r - r_dual)}; }

}  // namespace dp1
