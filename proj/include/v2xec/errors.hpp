#pragma once

#include <stdexcept>

namespace v2xec {

// Base for all domain errors thrown by the library. Precondition violations
// that are plain API misuse (bad iteration counts, malformed hex) throw
// std::invalid_argument instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroModulus : Error { using Error::Error; };
struct NonInvertible : Error { using Error::Error; };
struct CurveMismatch : Error { using Error::Error; };
struct ScalarOutOfRange : Error { using Error::Error; };
struct UnknownCurve : Error { using Error::Error; };
struct OrderMismatch : Error { using Error::Error; };
struct RandomnessExhausted : Error { using Error::Error; };
struct MalformedSignature : Error { using Error::Error; };
struct InfinityNotEncodable : Error { using Error::Error; };
struct NotOnCurve : Error { using Error::Error; };
struct NonResidue : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct ReservedChoice : Error { using Error::Error; };
struct InfoTooLong : Error { using Error::Error; };
struct DegenerateReconstruction : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

}  // namespace v2xec
