#pragma once

#include <stdexcept>
#include <string>

namespace flatmod {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// algebra
struct CtxMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };

// phimod constructors
struct ReducibleParameters : Error { using Error::Error; };
struct FieldTooSmall : Error { using Error::Error; };
struct SingularBlock : Error { using Error::Error; };

// search / pathfinder
struct SearchBudgetExceeded : Error { using Error::Error; };
struct OrdinaryInputDetected : Error { using Error::Error; };
struct IrreducibilityViolation : Error { using Error::Error; };
struct InternalInvariantViolation : Error { using Error::Error; };

// cli
struct InvalidInstance : Error { using Error::Error; };

}  // namespace flatmod
