#include "fuzzyrel/error.hpp"

#include <fmt/format.h>

namespace fuzzyrel {

LengthMismatch::LengthMismatch(std::size_t expected, std::size_t found)
    : Error(fmt::format("LengthMismatch: expected {} degrees, found {}", expected, found)) {}

DegreeOutOfRange::DegreeOutOfRange(std::size_t index, double value)
    : Error(fmt::format("DegreeOutOfRange: degree {} at index {} is not in [0, 1]", value, index)),
      index_(index),
      value_(value) {}

UniverseMismatch::UniverseMismatch()
    : Error("UniverseMismatch: operands are defined on different universes") {}

EmptyDivisor::EmptyDivisor()
    : Error("EmptyDivisor: bounded quotient divisor is the empty set") {}

ZeroDegreeDivisor::ZeroDegreeDivisor(std::string element)
    : Error(fmt::format("ZeroDegreeDivisor: divisor has degree 0 at '{}' (strict quotient mode)",
                        element)),
      element_(std::move(element)) {}

ScalarOutOfRange::ScalarOutOfRange(double kappa)
    : Error(fmt::format("ScalarOutOfRange: scalar {} is not in [0, 1]", kappa)) {}

NegativeExponent::NegativeExponent(double p)
    : Error(fmt::format("NegativeExponent: exponent {} is negative", p)) {}

LexError::LexError(std::size_t position, std::string found)
    : Error(fmt::format("LexError at offset {}: unexpected '{}'", position, found)),
      position_(position) {}

ParseError::ParseError(std::size_t position, std::string expected, std::string found)
    : Error(fmt::format("ParseError at offset {}: expected {}, found {}", position, expected, found)),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

UnboundVariable::UnboundVariable(std::string name)
    : Error(fmt::format("UnboundVariable: '{}' is not bound", name)), name_(std::move(name)) {}

UnknownTheorem::UnknownTheorem(const std::string& id)
    : Error(fmt::format("UnknownTheorem: no catalog entry '{}'", id)) {}

ArityTooLarge::ArityTooLarge(std::size_t arity, std::size_t limit)
    : Error(fmt::format("ArityTooLarge: {} variables exceed the grid limit of {}", arity, limit)) {}

NoEqualityClaim::NoEqualityClaim(const std::string& id)
    : Error(fmt::format("NoEqualityClaim: '{}' has no equality condition", id)) {}

}  // namespace fuzzyrel
