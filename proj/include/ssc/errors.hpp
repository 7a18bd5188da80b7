#pragma once

#include <stdexcept>
#include <string>

namespace ssc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error { using Error::Error; };
struct DegreeZero : Error { using Error::Error; };
struct FieldTooLarge : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

struct RaggedMatrix : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };
struct WrongHyperplaneDimension : Error { using Error::Error; };
struct EnumerationTooLarge : Error { using Error::Error; };

struct OutOfRange : Error { using Error::Error; };
struct PrecisionUnsupported : Error { using Error::Error; };

struct Infeasible : Error { using Error::Error; };
struct Unbounded : Error { using Error::Error; };
struct NodeBudgetExceeded : Error { using Error::Error; };

struct EmptyCode : Error { using Error::Error; };
struct EmptyOrSingleton : Error { using Error::Error; };

struct ParseError : Error { using Error::Error; };

} // namespace ssc
