#pragma once

#include <stdexcept>
#include <string>

namespace arith {

/// Base class for errors raised on bad input or violated preconditions.
/// The CLI maps these to exit code 2.
struct ArithError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : ArithError { using ArithError::ArithError; };
struct DimensionMismatch : ArithError { using ArithError::ArithError; };
struct BadInput : ArithError { using ArithError::ArithError; };
struct KernelDimension : ArithError { using ArithError::ArithError; };

struct SyntaxError : ArithError { using ArithError::ArithError; };
struct NotSquareFree : ArithError { using ArithError::ArithError; };
struct UnknownVariable : ArithError { using ArithError::ArithError; };

struct ZeroPolynomial : ArithError { using ArithError::ArithError; };
struct NotDominated : ArithError { using ArithError::ArithError; };
struct VariableUnused : ArithError { using ArithError::ArithError; };
struct NegativeLeading : ArithError { using ArithError::ArithError; };
struct BadLeadingCoefficient : ArithError { using ArithError::ArithError; };

struct NotQuasiNonSingular : ArithError { using ArithError::ArithError; };
struct NotAStructure : ArithError { using ArithError::ArithError; };

struct BadSize : ArithError { using ArithError::ArithError; };
struct LoopEdge : ArithError { using ArithError::ArithError; };

/// Resource caps exceeded. The CLI maps these to exit code 3.
struct CapExceeded : ArithError { using ArithError::ArithError; };
struct BoxTooLarge : CapExceeded { using CapExceeded::CapExceeded; };
struct TimeCapExceeded : CapExceeded { using CapExceeded::CapExceeded; };

} // namespace arith
