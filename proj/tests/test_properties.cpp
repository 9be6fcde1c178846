#include <doctest.h>

#include "properties.hpp"

namespace {

void require_clean(const props::PropertyResult& r, long min_instances) {
    CAPTURE(r.name);
    CAPTURE(r.first_failure);
    CHECK(r.failures == 0);
    CHECK(r.instances >= min_instances);
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("bilinear form") { require_clean(props::intersect_bilinear(), 1000); }
TEST_CASE("reflections") { require_clean(props::reflect_involution(), 1000); }
TEST_CASE("code q-hat laws") { require_clean(props::qhat_code_laws(), 1000); }
TEST_CASE("basis q-hat laws") { require_clean(props::qhat_basis_laws(), 1000); }
TEST_CASE("code relation on -K") { require_clean(props::code_relation_exhaustive(), 1); }
TEST_CASE("Cremona compatibility") { require_clean(props::cremona_compatibility(), 1); }
TEST_CASE("Weyl-basis robustness") { require_clean(props::weyl_basis_robustness(), 1000); }
TEST_CASE("code agrees with a vanishing basis") { require_clean(props::code_matches_vanishing_basis(), 1); }
TEST_CASE("enumeration closure") { require_clean(props::enumeration_closure(), 1000); }
TEST_CASE("box-scan agreement") { require_clean(props::box_scan_agreement(), 1000); }

TEST_CASE("other seeds") {
    require_clean(props::qhat_code_laws(7, 300), 300);
    require_clean(props::box_scan_agreement(7, 100), 100);
}

}  // TEST_SUITE
