#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzyrel {

// Root of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t expected, std::size_t found);
};

class DegreeOutOfRange : public Error {
public:
    DegreeOutOfRange(std::size_t index, double value);
    std::size_t index() const noexcept { return index_; }
    double value() const noexcept { return value_; }

private:
    std::size_t index_;
    double value_;
};

class UniverseMismatch : public Error {
public:
    UniverseMismatch();
};

class EmptyDivisor : public Error {
public:
    EmptyDivisor();
};

class ZeroDegreeDivisor : public Error {
public:
    explicit ZeroDegreeDivisor(std::string element);
    const std::string& element() const noexcept { return element_; }

private:
    std::string element_;
};

class ScalarOutOfRange : public Error {
public:
    explicit ScalarOutOfRange(double kappa);
};

class NegativeExponent : public Error {
public:
    explicit NegativeExponent(double p);
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class LexError : public Error {
public:
    LexError(std::size_t position, std::string found);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, std::string expected, std::string found);
    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    std::size_t position_;
    std::string expected_;
    std::string found_;
};

// Malformed input file: bad JSON, missing or unexpected keys.
class InputFormatError : public Error {
public:
    using Error::Error;
};

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(std::string name);
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class UnknownTheorem : public Error {
public:
    explicit UnknownTheorem(const std::string& id);
};

class ParameterOutOfRange : public Error {
public:
    using Error::Error;
};

class ArityTooLarge : public Error {
public:
    ArityTooLarge(std::size_t arity, std::size_t limit);
};

class NoEqualityClaim : public Error {
public:
    explicit NoEqualityClaim(const std::string& id);
};

}  // namespace fuzzyrel
