#include <doctest.h>

#include <set>

#include "dp1/errors.hpp"
#include "dp1/real_forms.hpp"
#include "dp1/root_system.hpp"
#include "oracles.hpp"

using namespace dp1;

TEST_SUITE("real_forms") {

TEST_CASE("class records") {
    const auto& all = deformation_classes();
    CHECK(all.size() == 11);
    const auto m = find_class("M-connected");
    REQUIRE(m);
    CHECK(deformation_class(*m).lambda_type == "E8");
    CHECK(deformation_class(*m).rank == 8);
    CHECK(deformation_class(*m).topology == "RP2#4T2");
    const auto s = find_class("M-split");
    REQUIRE(s);
    CHECK(deformation_class(*s).lambda_type == "0");
    CHECK(deformation_class(*s).rank == 0);
    CHECK(deformation_class(*s).topology == "RP2+4S2");
    for (const auto& c : all) {
        CHECK(c.euler_char == 9 - 2 * c.rank);
        CHECK(c.rank + bertini_dual(c).rank == 8);
        CHECK(c.euler_char + bertini_dual(c).euler_char == 2);
        CHECK(bertini_dual(bertini_dual(c)).id == c.id);
        if (c.rank <= 6)
            CHECK(expected_root_count(c.lambda_type) ==
                  static_cast<Int>(oracle::lattice_vectors(stored_lambda_basis(c.id), -2).size()));
    }
}

TEST_CASE("lookup by lattice type") {
    CHECK(find_class("D6") == ClassId::M2Connected);
    CHECK(find_class("E7") == ClassId::M1Connected);
    CHECK_FALSE(find_class("D4").has_value());  // two classes
    CHECK_FALSE(find_class("bogus").has_value());
}

TEST_CASE("Bertini pairs") {
    const auto pairs = bertini_pairs();
    CHECK(pairs.size() == 7);
    std::set<ClassId> seen;
    for (const auto& [a, b] : pairs) {
        seen.insert(a);
        seen.insert(b);
        CHECK(deformation_class(a).dual == b);
        CHECK(deformation_class(a).rank >= deformation_class(b).rank);
    }
    CHECK(seen.size() == 11);
    CHECK(deformation_class(ClassId::M4).dual == ClassId::M4);
}

TEST_CASE("stored embeddings pass every check") {
    for (const auto& c : deformation_classes()) {
        CAPTURE(c.name);
        for (const auto& chk : check_embedding(c.id, Sublattice(stored_lambda_basis(c.id)))) {
            CAPTURE(chk.name);
            CAPTURE(chk.detail);
            CHECK(chk.pass);
        }
        const auto& emb = lambda_basis(c.id);
        CHECK(emb.sublattice.rank() == static_cast<std::size_t>(c.rank));
        CHECK(root_system_type(orthogonal_complement(emb.sublattice)).label() == bertini_dual(c).lambda_type);
    }
}

TEST_CASE("4A1 kernel holds exactly 8 roots") {
    const auto& emb = lambda_basis(ClassId::M4);
    const auto comp = orthogonal_complement(emb.sublattice);
    CHECK(comp.rank() == 4);
    CHECK(enumerate_vectors(comp, -2).size() == 8);
    Int direct = 0;
    for (const auto& e : oracle::ambient_scan(-2)) {
        bool orth = true;
        for (const auto& b : emb.sublattice.basis()) orth = orth && oracle::dot(e, b) == 0;
        direct += orth;
    }
    CHECK(direct == 8);
}

TEST_CASE("saturation") {
    const PicClass a = PicClass::exceptional(1) - PicClass::exceptional(2);
    const PicClass b = PicClass::exceptional(3) - PicClass::exceptional(4);
    const Sublattice doubled({2 * a, b});
    const Sublattice sat = saturation(doubled);
    CHECK(sat.contains(a));
    CHECK(sat.discriminant() == 4);
}

TEST_CASE("broken embeddings are rejected") {
    // four orthogonal roots inside one D4: right shape, wrong complement
    const PicClass h = PicClass::hyperplane();
    auto l = [](int i) { return PicClass::exceptional(i); };
    const Sublattice wrong({l(1) - l(2), l(3) - l(4), h - l(1) - l(2) - l(5), h - l(3) - l(4) - l(5)});
    bool complement_failed = false;
    for (const auto& chk : check_embedding(ClassId::M4, wrong))
        if (chk.name == "complement-type") complement_failed = !chk.pass;
    CHECK(complement_failed);
    CHECK_THROWS_AS(make_embedding(ClassId::M4, wrong), InvariantViolation);
    CHECK_THROWS_AS(make_embedding(ClassId::MConnected, wrong), InvariantViolation);
}

}  // TEST_SUITE
