#pragma once

// Randomized and exhaustive property suites shared by the unit tests and the
// acceptance binary.  Seeds are fixed so failures reproduce.

#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct PropertyResult {
    std::string name;
    long instances = 0;
    long failures = 0;
    bool randomized = true;
    std::string first_failure;
};

inline constexpr std::uint64_t kSeed = 20240611;

PropertyResult intersect_bilinear(std::uint64_t seed = kSeed, long n = 1000);
PropertyResult reflect_involution(std::uint64_t seed = kSeed, long n = 1000);
PropertyResult qhat_code_laws(std::uint64_t seed = kSeed, long n = 2000);
PropertyResult qhat_basis_laws(std::uint64_t seed = kSeed, long n = 2000);
PropertyResult code_relation_exhaustive();
PropertyResult cremona_compatibility();
PropertyResult weyl_basis_robustness(std::uint64_t seed = kSeed, long images_per_class = 100);
PropertyResult code_matches_vanishing_basis(std::uint64_t seed = kSeed);
PropertyResult enumeration_closure(std::uint64_t seed = kSeed, long n = 1000);
PropertyResult box_scan_agreement(std::uint64_t seed = kSeed, long n = 1000);

std::vector<PropertyResult> run_all();

}  // namespace props
