#pragma once

#include <stdexcept>
#include <string>

namespace alwyn {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct DiscriminantMismatch : Error {
    explicit DiscriminantMismatch(const std::string& what) : Error(what) {}
};

struct NonInvertible : Error {
    explicit NonInvertible(const std::string& what) : Error(what) {}
};

struct InvalidParams : Error {
    explicit InvalidParams(const std::string& what) : Error(what) {}
};

struct DegenerateParameters : Error {
    explicit DegenerateParameters(const std::string& what) : Error(what) {}
};

struct NonSquare : Error {
    NonSquare() : Error("matrix is not square") {}
};

struct ZeroCoefficient : Error {
    explicit ZeroCoefficient(const std::string& what) : Error(what) {}
};

struct IndexOutOfDomain : Error {
    explicit IndexOutOfDomain(const std::string& what) : Error(what) {}
};

struct UnboundVariable : Error {
    explicit UnboundVariable(const std::string& what) : Error(what) {}
};

// Parse failure with a 1-based source position and the tokens that would
// have been accepted there.
struct SyntaxError : Error {
    int line;
    int column;
    std::string expected;

    SyntaxError(int line_, int column_, const std::string& expected_,
                const std::string& what)
        : Error(what), line(line_), column(column_), expected(expected_) {}
};

}  // namespace alwyn
