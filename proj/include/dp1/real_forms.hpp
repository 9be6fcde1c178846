#pragma once

// The eleven real deformation classes of degree-one del Pezzo surfaces and
// concrete embeddings of their lattices Lambda(X) inside K-perp.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dp1/lattice.hpp"

namespace dp1 {

enum class ClassId {
    MConnected,
    M1Connected,
    M2Connected,
    M3Connected,
    M4,
    M2IKlein,
    M2ISphere,
    MSplit,
    M1Split,
    M2Split,
    M3Split,
};

inline constexpr int kClassCount = 11;

enum class PinModelKind { Code, VanishingBasis };

struct DeformationClass {
    ClassId id;
    std::string name;         // "M-connected", ...
    std::string topology;     // "RP2#4T2", ...
    std::string smith_type;   // "M", "M-1", ..., "(M-2)_I"
    std::string lambda_type;  // "E8", ..., "0"
    int rank = 0;
    int euler_char = 0;
    ClassId dual;
    PinModelKind qhat_model;
};

const std::vector<DeformationClass>& deformation_classes();
const DeformationClass& deformation_class(ClassId id);
const std::string& class_name(ClassId id);

/// Accepts the class name ("M-2-connected") or, where unambiguous, the
/// lattice type ("D6").  Case-sensitive.
std::optional<ClassId> find_class(std::string_view key);

const DeformationClass& bertini_dual(const DeformationClass& c);

/// The 7 Bertini pairs, each listed once with the larger rank first.
std::vector<std::pair<ClassId, ClassId>> bertini_pairs();

/// Saturated sublattice of K-perp orthogonal to L (integer kernel, then LLL).
Sublattice orthogonal_complement(const Sublattice& lattice);

/// (L tensor Q) intersected with K-perp.
Sublattice saturation(const Sublattice& lattice);

struct LambdaEmbedding {
    ClassId class_id;
    Sublattice sublattice;
};

struct EmbeddingCheck {
    std::string name;  // "simple-system-type", "root-count", "complement-type", "root-generated"
    bool pass = false;
    std::string detail;
};

/// Runs every embedding invariant for class `id` against `lattice`.
std::vector<EmbeddingCheck> check_embedding(ClassId id, const Sublattice& lattice);

/// Throws InvariantViolation naming the first failing check.
LambdaEmbedding make_embedding(ClassId id, const Sublattice& lattice);

/// The stored simple roots for class `id` (not validated).
std::vector<PicClass> stored_lambda_basis(ClassId id);

/// Validated embedding for `id`, built once.
const LambdaEmbedding& lambda_basis(ClassId id);

/// Expected number of roots of the lattice type.
Int expected_root_count(const std::string& lambda_type);

}  // namespace dp1
