#pragma once

// Exact arithmetic in the Picard lattice Z^{1,8} of a degree-one del Pezzo
// surface, and enumeration of vectors of fixed square in negative-definite
// sublattices of K-perp.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dp1 {

using Int = std::int64_t;
using IntMatrix = std::vector<std::vector<Int>>;

/// A class in Pic = Z^{1,8}, stored as plain coordinates in the ordered
/// basis (h, l1, ..., l8).  The form is diag(+1, -1, ..., -1).
class PicClass {
public:
    static constexpr std::size_t kSize = 9;

    constexpr PicClass() = default;
    constexpr explicit PicClass(const std::array<Int, kSize>& coeffs) : coeffs_(coeffs) {}

    static constexpr PicClass hyperplane() { return PicClass({1, 0, 0, 0, 0, 0, 0, 0, 0}); }
    /// The exceptional class l_i, 1 <= i <= 8.
    static PicClass exceptional(int i);
    /// K = -3h + l1 + ... + l8.
    static constexpr PicClass canonical() { return PicClass({-3, 1, 1, 1, 1, 1, 1, 1, 1}); }

    constexpr Int operator[](std::size_t i) const { return coeffs_[i]; }
    constexpr Int& operator[](std::size_t i) { return coeffs_[i]; }
    constexpr const std::array<Int, kSize>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    PicClass& operator+=(const PicClass& o);
    PicClass& operator-=(const PicClass& o);
    PicClass& operator*=(Int s);
    friend PicClass operator+(PicClass a, const PicClass& b) { return a += b; }
    friend PicClass operator-(PicClass a, const PicClass& b) { return a -= b; }
    friend PicClass operator*(Int s, PicClass a) { return a *= s; }
    PicClass operator-() const { return Int{-1} * *this; }

    auto operator<=>(const PicClass&) const = default;

    /// "(c0; c1,c2,...,c8)"
    std::string to_string() const;

private:
    std::array<Int, kSize> coeffs_{};
};

Int intersect(const PicClass& a, const PicClass& b);
inline Int square(const PicClass& a) { return intersect(a, a); }

/// Canonical degree -a.K.
Int degree(const PicClass& a);

/// a + (a.e) e.  Throws std::invalid_argument unless e.e == -2.
PicClass reflect(const PicClass& a, const PicClass& e);

/// A sublattice of K-perp given by an independent list of basis vectors.
/// The Gram matrix is cached; it is negative definite because K-perp is.
class Sublattice {
public:
    Sublattice() = default;
    /// Throws std::invalid_argument if a vector is not orthogonal to K or the
    /// list is linearly dependent.
    explicit Sublattice(std::vector<PicClass> basis);

    std::size_t rank() const { return basis_.size(); }
    const std::vector<PicClass>& basis() const { return basis_; }
    const IntMatrix& gram() const { return gram_; }
    /// det(-gram); 1 for the rank-0 lattice.
    Int discriminant() const { return det_; }

    PicClass combine(std::span<const Int> coords) const;

    /// Integral coordinates of x in this basis, or nullopt when x is not in
    /// the Z-span.
    std::optional<std::vector<Int>> coordinates_of(const PicClass& x) const;
    bool contains(const PicClass& x) const { return coordinates_of(x).has_value(); }

private:
    std::vector<PicClass> basis_;
    IntMatrix gram_;
    // det * gram^{-1}, exact
    IntMatrix adjugate_;
    Int det_ = 1;
};

/// Z-basis of K-perp: h-l1-l2-l3, l1-l2, ..., l7-l8 (an E8 simple system).
std::vector<PicClass> k_perp_basis();
const Sublattice& k_perp();

inline constexpr const char* kEnumNodeLimitEnv = "DP1_MAX_ENUM_NODES";

struct EnumOptions {
    /// Abort (std::runtime_error) once this many search nodes were visited.
    std::optional<std::uint64_t> node_limit;

    /// Reads DP1_MAX_ENUM_NODES when set.
    static EnumOptions from_environment();
};

/// All integer y with y^T G y == target, for a symmetric positive-definite G.
/// Coordinate bounds come from completing squares over the rationals; there
/// is no floating point anywhere in the search.  Output is sorted
/// lexicographically.  Throws std::invalid_argument if G is not symmetric
/// positive definite or target <= 0.
std::vector<std::vector<Int>> enumerate_form_values(const IntMatrix& positive_gram, Int target,
                                                    const EnumOptions& options = EnumOptions::from_environment());

/// { v in span_Z(L) : v.v == norm } in ambient coordinates, ordered
/// lexicographically on basis coordinates.  Requires norm < 0.
std::vector<PicClass> enumerate_vectors(const Sublattice& lattice, Int norm,
                                        const EnumOptions& options = EnumOptions::from_environment());

/// True iff the symmetric matrix is positive definite (exact LDL^T).
bool is_positive_definite(const IntMatrix& m);

/// Z-basis of { y in Z^n : M y = 0 } (always saturated in Z^n).
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m, std::size_t columns);

/// LLL-reduced basis (delta = 3/4) of the same sublattice.
Sublattice lll_reduce(const Sublattice& lattice);

}  // namespace dp1
