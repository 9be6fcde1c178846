#include <doctest.h>

#include <stdexcept>

#include "dp1/wallcross.hpp"
#include "oracles.hpp"

using namespace dp1;

namespace {

const PicClass kMinus2K = PicClass({6, -2, -2, -2, -2, -2, -2, -2, -2});

const BClass& find_alpha(const std::vector<BClass>& set, const PicClass& v) {
    for (const auto& b : set)
        if (b.v == v) return b;
    throw std::logic_error("class not found");
}

}  // namespace

TEST_SUITE("wallcross") {

TEST_CASE("vanishing roots") {
    CHECK(vanishing_roots(class_model(ClassId::MConnected)).size() == 128);
    CHECK(vanishing_roots(class_model(ClassId::M4)).size() == 8);
    CHECK(vanishing_roots(class_model(ClassId::MSplit)).empty());
    const auto& e8 = class_model(ClassId::MConnected);
    const PicClass bad = PicClass::exceptional(1) - PicClass::exceptional(2);  // q-hat 2
    CHECK_THROWS_AS(make_vanishing_root(e8, bad), std::invalid_argument);
    CHECK_THROWS_AS(make_vanishing_root(e8, PicClass::hyperplane()), std::invalid_argument);
    // a root outside Lambda of the A1 class
    const auto& a1 = class_model(ClassId::M1Split);
    CHECK_THROWS_AS(make_vanishing_root(a1, PicClass::exceptional(1) - PicClass::exceptional(2)),
                    std::invalid_argument);
}

TEST_CASE("splitting examples") {
    const auto& m = class_model(ClassId::MConnected);
    const PicClass h = PicClass::hyperplane();
    const PicClass E = h - PicClass::exceptional(1) - PicClass::exceptional(2) - PicClass::exceptional(3);
    const auto ve = make_vanishing_root(m, E);
    const auto b0 = b_classes(m, 0);
    const auto b2 = b_classes(m, 1);
    const auto b4 = b_classes(m, 2);

    auto s = splittings(m, b0.front(), ve);
    REQUIRE(s.size() == 1);
    CHECK(s[0].r == 1);
    CHECK(s[0].d == kMinus2K - E);
    CHECK(s[0].d_dot_e == 2);

    // e = -E: r = 2, D = -2K - E
    s = splittings(m, find_alpha(b2, -E), ve);
    REQUIRE(s.size() == 1);
    CHECK(s[0].r == 2);
    CHECK(s[0].d == kMinus2K - E);
    CHECK(s[0].d_square == 2);
    CHECK(s[0].d_dot_e == 2);

    // e.E = 1
    const PicClass e1 = PicClass::exceptional(3) - PicClass::exceptional(4);
    REQUIRE(oracle::dot(e1, E) == 1);
    s = splittings(m, find_alpha(b2, e1), ve);
    REQUIRE(s.size() == 1);
    CHECK(s[0].r == 1);
    CHECK(s[0].d_square == 2);
    CHECK(s[0].d_dot_e == 1);
    CHECK(s[0].d_stratum == 2);

    // v in B^4 with v.E = 2
    const PicClass v = -E + (PicClass::exceptional(4) - PicClass::exceptional(5));
    REQUIRE(square(v) == -4);
    REQUIRE(oracle::dot(v, E) == 2);
    s = splittings(m, find_alpha(b4, v), ve);
    REQUIRE(s.size() == 1);
    CHECK(s[0].r == 2);
    CHECK(s[0].d_dot_e == 2);
    CHECK(s[0].d_stratum == 4);

    // nothing when v.E = -1
    s = splittings(m, find_alpha(b2, -e1), ve);
    CHECK(s.empty());

    // mismatched class
    const auto& d6 = class_model(ClassId::M2Connected);
    CHECK_THROWS_AS(splittings(d6, b0.front(), ve), std::invalid_argument);
}

TEST_CASE("reference splitting table") {
    CHECK(reference_splittings(0, 0).size() == 1);
    CHECK(reference_splittings(2, -1).empty());
    CHECK(reference_splittings(4, 0).empty());
    const auto r = reference_splittings(4, 1);
    REQUIRE(r.size() == 1);
    CHECK(r[0].r == 1);
    CHECK(r[0].d_square == 0);
    CHECK(r[0].d_dot_e == 1);
    CHECK(r[0].d_stratum == 4);
}

TEST_CASE("orthogonal root sums, pairing and delta tables") {
    const auto& e8 = class_model(ClassId::MConnected);
    const auto ve8 = vanishing_roots(e8).front();
    CHECK(orth_root_sum(e8, ve8) == 14);
    CHECK(pairing_cancellation(e8, ve8, 1) == 0);
    CHECK(pairing_cancellation(e8, ve8, 2) == 0);
    auto dt = delta_table(e8, ve8);
    CHECK(dt.d41 == 0);
    CHECK(dt.d42 == 28);
    CHECK(dt.d20 == -28);
    CHECK(dt.d21 == 0);
    CHECK(dt.d22 == -16);
    CHECK(dt.weighted_balance() == 12);

    const auto& d6 = class_model(ClassId::M2Connected);
    for (const auto& ve : vanishing_roots(d6)) CHECK(orth_root_sum(d6, ve) == 10);

    const auto& a1 = class_model(ClassId::M1Split);
    CHECK(orth_root_sum(a1, vanishing_roots(a1).front()) == 0);

    const auto& m4 = class_model(ClassId::M4);
    dt = delta_table(m4, vanishing_roots(m4).front());
    CHECK(dt.d42 == 12);
    CHECK(dt.d20 == -12);
    CHECK(dt.d22 == 0);

    for (Int r = 1; r <= 8; ++r) {
        const auto f = delta_formulas(r, 8 - r);
        CHECK(f.d42 + f.d20 == 0);
        CHECK(f.weighted_balance() == 12);
    }
}

}  // TEST_SUITE
