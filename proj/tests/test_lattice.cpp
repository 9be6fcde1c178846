#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "dp1/lattice.hpp"
#include "dp1/root_system.hpp"
#include "oracles.hpp"

using namespace dp1;

TEST_SUITE("lattice") {

TEST_CASE("intersection form and canonical class") {
    const PicClass h = PicClass::hyperplane(), k = PicClass::canonical();
    CHECK(intersect(h, h) == 1);
    CHECK(intersect(PicClass::exceptional(3), PicClass::exceptional(3)) == -1);
    CHECK(intersect(PicClass::exceptional(3), PicClass::exceptional(4)) == 0);
    CHECK(square(k) == 1);
    CHECK(degree(h) == 3);
    CHECK(degree(PicClass::exceptional(1)) == 1);
    CHECK(degree(-k) == 1);
    CHECK(k.to_string() == "(-3; 1,1,1,1,1,1,1,1)");
    CHECK_THROWS_AS(PicClass::exceptional(0), std::invalid_argument);
    CHECK_THROWS_AS(PicClass::exceptional(9), std::invalid_argument);
}

TEST_CASE("reflection") {
    const PicClass e = PicClass::exceptional(1) - PicClass::exceptional(2);
    CHECK(reflect(PicClass::exceptional(1), e) == PicClass::exceptional(2));
    CHECK(reflect(e, e) == -e);
    CHECK_THROWS_AS(reflect(e, PicClass::hyperplane()), std::invalid_argument);
    CHECK_THROWS_AS(reflect(e, 2 * e), std::invalid_argument);
}

TEST_CASE("K-perp basis is an E8 simple system") {
    const auto& kp = k_perp();
    CHECK(kp.rank() == 8);
    CHECK(kp.discriminant() == 1);
    for (const auto& b : kp.basis()) {
        CHECK(intersect(b, PicClass::canonical()) == 0);
        CHECK(square(b) == -2);
    }
    CHECK(classify_simple_system(kp.gram()).label() == "E8");
}

TEST_CASE("sublattice validation and coordinates") {
    CHECK_THROWS_AS(Sublattice({PicClass::hyperplane()}), std::invalid_argument);
    const PicClass a = PicClass::exceptional(1) - PicClass::exceptional(2);
    const PicClass b = PicClass::exceptional(2) - PicClass::exceptional(3);
    CHECK_THROWS_AS(Sublattice({a, b, a + b}), std::invalid_argument);
    const Sublattice two_a1({a, PicClass::exceptional(3) - PicClass::exceptional(4)});
    CHECK(two_a1.discriminant() == 4);
    const Sublattice a2({a, b});
    const auto y = a2.coordinates_of(a - 2 * b);
    REQUIRE(y.has_value());
    CHECK(*y == std::vector<Int>{1, -2});
    CHECK_FALSE(two_a1.contains(b));
    CHECK_FALSE(two_a1.contains(PicClass::exceptional(1) - PicClass::exceptional(3)));
}

TEST_CASE("E8 root and (-4)-vector counts against the ambient scan") {
    auto roots = enumerate_vectors(k_perp(), -2);
    auto minus4 = enumerate_vectors(k_perp(), -4);
    CHECK(roots.size() == 240);
    CHECK(minus4.size() == 2160);
    auto want_roots = oracle::ambient_scan(-2);
    auto want_minus4 = oracle::ambient_scan(-4);
    std::sort(roots.begin(), roots.end());
    std::sort(minus4.begin(), minus4.end());
    std::sort(want_roots.begin(), want_roots.end());
    std::sort(want_minus4.begin(), want_minus4.end());
    CHECK(roots == want_roots);
    CHECK(minus4 == want_minus4);
}

TEST_CASE("enumerate_form_values") {
    const IntMatrix a2 = {{2, -1}, {-1, 2}};
    CHECK(enumerate_form_values(a2, 2).size() == 6);
    auto got = enumerate_form_values(a2, 6);
    CHECK(got == oracle::box_scan(a2, 6));
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(enumerate_form_values({{1}}, 9) == std::vector<std::vector<Int>>{{-3}, {3}});
    CHECK_THROWS_AS(enumerate_form_values(a2, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_form_values({{2, 1}, {0, 2}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_form_values({{1, 2}, {2, 1}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_vectors(k_perp(), 0), std::invalid_argument);
}

TEST_CASE("node limit from the environment") {
    REQUIRE(setenv(kEnumNodeLimitEnv, "10", 1) == 0);
    CHECK(EnumOptions::from_environment().node_limit == std::optional<std::uint64_t>{10});
    CHECK_THROWS_AS(enumerate_vectors(k_perp(), -2), std::runtime_error);
    REQUIRE(unsetenv(kEnumNodeLimitEnv) == 0);
    CHECK_FALSE(EnumOptions::from_environment().node_limit.has_value());
    CHECK(enumerate_vectors(k_perp(), -2).size() == 240);
    EnumOptions generous;
    generous.node_limit = 1000000;
    CHECK(enumerate_vectors(k_perp(), -2, generous).size() == 240);
}

TEST_CASE("positive definiteness and integer kernel") {
    CHECK(is_positive_definite({{2, -1}, {-1, 2}}));
    CHECK_FALSE(is_positive_definite({{1, 2}, {2, 1}}));
    CHECK_FALSE(is_positive_definite({{0}}));
    const auto ker = integer_kernel({{1, 1, 1}}, 3);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) CHECK(v[0] + v[1] + v[2] == 0);
    // saturated: kernel of (2, 4) is spanned by (2, -1), not (4, -2)
    const auto k2 = integer_kernel({{2, 4}}, 2);
    REQUIRE(k2.size() == 1);
    CHECK(std::abs(k2[0][0]) == 2);
    CHECK(std::abs(k2[0][1]) == 1);
}

TEST_CASE("LLL keeps the lattice") {
    const PicClass a = PicClass::exceptional(1) - PicClass::exceptional(2);
    const PicClass b = PicClass::exceptional(2) - PicClass::exceptional(3);
    const Sublattice skew({a, 5 * a + b});
    const Sublattice red = lll_reduce(skew);
    CHECK(red.discriminant() == skew.discriminant());
    for (const auto& v : red.basis()) {
        CHECK(skew.contains(v));
        CHECK(square(v) == -2);
    }
}

TEST_CASE("root system classification") {
    CHECK(root_system_type(k_perp()).label() == "E8");
    const PicClass a = PicClass::exceptional(1) - PicClass::exceptional(2);
    const PicClass b = PicClass::exceptional(3) - PicClass::exceptional(4);
    CHECK(root_system_type(Sublattice({a, b})).label() == "2A1");
    CHECK(root_system_type(Sublattice()).label() == "0");
    const RootSystemType t = root_system_type_of_roots(enumerate_vectors(k_perp(), -2));
    CHECK(t.root_count() == 240);
    CHECK(t.rank() == 8);
    CHECK_FALSE(classify_simple_system({{-2, 2}, {2, -2}}).known);
}

}  // TEST_SUITE
