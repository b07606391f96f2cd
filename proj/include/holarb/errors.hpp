#ifndef HOLARB_ERRORS_HPP
#define HOLARB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace holarb {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- measure ------------------------------------------------------------
struct WeightSumError : Error { using Error::Error; };
struct DuplicatePointError : Error { using Error::Error; };
struct SpaceMismatchError : Error { using Error::Error; };
struct AbsoluteContinuityError : Error { using Error::Error; };
struct NullPreservationError : Error { using Error::Error; };

// -- category -----------------------------------------------------------
struct DanglingEndpointError : Error { using Error::Error; };
struct DuplicateArrowError : Error { using Error::Error; };
struct NotComposableError : Error { using Error::Error; };
struct UnknownObjectError : Error { using Error::Error; };
struct UnknownArrowError : Error { using Error::Error; };

// -- strategy -----------------------------------------------------------
struct IncompleteDeclarationError : Error { using Error::Error; };

// -- cli / generator ----------------------------------------------------
struct SizeBoundError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

} // namespace holarb

#endif // HOLARB_ERRORS_HPP
