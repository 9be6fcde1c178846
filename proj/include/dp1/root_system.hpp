#pragma once

// ADE identification of the root system of a negative-definite sublattice.

#include <string>
#include <vector>

#include "dp1/lattice.hpp"

namespace dp1 {

struct DynkinComponent {
    char family = 'A';  // 'A', 'D' or 'E'
    int rank = 0;

    std::string label() const { return std::string(1, family) + std::to_string(rank); }
    /// Number of roots of the irreducible system.
    Int root_count() const;
    auto operator<=>(const DynkinComponent&) const = default;
};

struct RootSystemType {
    std::vector<DynkinComponent> components;  // E before D before A, larger rank first
    bool known = true;

    /// "E8", "D4+A1", "4A1", "0" for the empty system, "unknown" otherwise.
    std::string label() const;
    int rank() const;
    Int root_count() const;
};

/// Lexicographically positive: first nonzero coordinate in (h, l1..l8) is > 0.
bool is_lex_positive(const PicClass& v);

/// Simple roots of the positive system cut out by is_lex_positive: the
/// positive roots that are not a sum of two positive roots.
std::vector<PicClass> simple_roots(const std::vector<PicClass>& roots);

/// Same, for the positive system { f(v) > 0 } of an integral functional f on
/// ambient coordinates.  Empty if f vanishes on some root.
std::vector<PicClass> simple_roots(const std::vector<PicClass>& roots, const std::array<Int, PicClass::kSize>& f);

/// Reads the Dynkin diagram off the Gram matrix of a simple system
/// (diagonal -2, off-diagonal 0 or 1).  Returns known=false on anything else.
RootSystemType classify_simple_system(const IntMatrix& gram);

/// Enumerates the roots of L, extracts simple roots and classifies them.
/// The root count of the result is cross-checked against the enumeration.
RootSystemType root_system_type(const Sublattice& lattice);
RootSystemType root_system_type_of_roots(const std::vector<PicClass>& roots);

}  // namespace dp1
