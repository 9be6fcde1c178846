#pragma once

#include <stdexcept>
#include <string>

namespace dp1 {

/// Raised when a computed object breaks a property that holds by
/// construction (odd q-hat on a B-class, non-constant q-hat on a table row,
/// a failed pairing check).  Distinct from std::invalid_argument, which is
/// reserved for bad caller input.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dp1
