#pragma once

// The Z/4-valued quadratic function q-hat on real classes, evaluated either
// from the code of a real blowup model or from a root basis on which it
// vanishes, plus Cremona moves on codes.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dp1/lattice.hpp"

namespace dp1 {

/// Residue mod 4 stored as 0..3.
class QhatValue {
public:
    constexpr QhatValue() = default;
    constexpr explicit QhatValue(Int v) : v_(static_cast<int>(((v % 4) + 4) % 4)) {}

    constexpr int value() const { return v_; }
    constexpr bool is_even() const { return v_ % 2 == 0; }

    friend constexpr QhatValue operator+(QhatValue a, QhatValue b) { return QhatValue(a.v_ + b.v_); }
    friend constexpr bool operator==(QhatValue, QhatValue) = default;

private:
    int v_ = 0;
};

/// i^q for even q: +1 for 0, -1 for 2.  Throws InvariantViolation on odd q.
Int i_power(QhatValue q);

/// Code (a0, a1, ..., a_{8-2r}) of a real blowup model with r imaginary
/// pairs.  Imaginary pairs occupy the top exceptional indices, (l7,l8) first,
/// then (l5,l6), ...; the real exceptional classes are l1..l_{8-2r}.
class Code {
public:
    /// residues are taken mod 4 and must be odd; throws std::invalid_argument
    /// on a wrong length, an even residue, or a sum that is not 1 mod 4.
    Code(int pairs, const std::vector<Int>& residues);

    /// Convenience: signs +1/-1 mapped to residues 1/3.
    static Code from_signs(int pairs, const std::vector<int>& signs);
    static Code all_plus(int pairs);
    static Code all_minus(int pairs);

    int pairs() const { return pairs_; }
    int real_count() const { return 8 - 2 * pairs_; }
    /// Residue of h (index 0) or of l_i (1 <= i <= real_count), in {1, 3}.
    int residue(int index) const { return residues_.at(static_cast<std::size_t>(index)); }
    const std::vector<int>& residues() const { return residues_; }

    /// "(1,1,-1,...)" with residues printed as signs.
    std::string to_string() const;

    auto operator<=>(const Code&) const = default;

private:
    int pairs_ = 0;
    std::vector<int> residues_;
};

/// True when x has equal coordinates on every imaginary pair of the model.
bool is_real_class(int pairs, const PicClass& x);

/// q-hat from a code.  Throws std::invalid_argument for a non-real class.
QhatValue qhat_code(const Code& code, const PicClass& x);

/// q-hat from a root basis on which it vanishes: x.x + 2 * sum(n_i) mod 4
/// with x = sum n_i b_i.  Throws std::invalid_argument when x is not in the
/// span.
QhatValue qhat_vanishing_basis(const Sublattice& basis, const PicClass& x);

struct CremonaMove {
    enum class Kind { Real, Imaginary };
    Kind kind = Kind::Real;
    int i = 0, j = 0, k = 0;  // j, k unused for Imaginary

    std::string to_string() const;
    bool operator==(const CremonaMove&) const = default;
};

/// (a0, ai, aj, ak) -> each replaced by the sum of the other three.
Code cremona_code(const Code& code, int i, int j, int k);
/// Swaps a0 and ai (move based at l_i and the top imaginary pair).
Code cremona_imaginary(const Code& code, int i);
Code apply(const Code& code, const CremonaMove& move);

/// Coordinates of x in the basis obtained from the move: for (i,j,k)
/// h' = 2h-li-lj-lk, li' = h-lj-lk, ...; the imaginary move uses (i,7,8).
PicClass cremona_coordinates(const CremonaMove& move, const PicClass& x);

/// All moves available to a code with `pairs` imaginary pairs.
std::vector<CremonaMove> cremona_moves(int pairs);

struct NormalizedCode {
    Code code;
    std::vector<CremonaMove> moves;  // applied in order to the input
};

/// Breadth-first search over Cremona moves; returns the lexicographically
/// smallest reachable code (residues compared as 1 < 3) with a shortest
/// witnessing move sequence.
NormalizedCode normalize_code(const Code& code);

/// Shortest move sequence from `from` to `to`, if one exists.
std::optional<std::vector<CremonaMove>> cremona_path(const Code& from, const Code& to);

struct VanishingBasis {
    Sublattice basis;
};

using PinModel = std::variant<Code, VanishingBasis>;

QhatValue qhat(const PinModel& model, const PicClass& x);

/// Searches for a simple system of `roots` (positive system cut out by a
/// random integral functional) on which `model` vanishes.  Deterministic for
/// a fixed seed; returns nullopt after `attempts` failures.
std::optional<std::vector<PicClass>> find_vanishing_simple_system(const std::vector<PicClass>& roots,
                                                                  const PinModel& model, std::uint64_t seed,
                                                                  int attempts = 5000);

}  // namespace dp1
