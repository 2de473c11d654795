#pragma once

#include <stdexcept>
#include <string>

namespace relfix {

/// Raised when an instance document or a structure under construction
/// violates a structural precondition (asymmetric table, unknown label,
/// non-total map, parameter outside its admissible range, ...).
class InstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace relfix
