#pragma once

#include <stdexcept>
#include <string>

namespace innertwist {

/// Data failed structural validation: mismatched field orders, dimension
/// mismatches, grade-preservation violations, missing half-braiding
/// components.  Structural errors mean the input is malformed; they are
/// distinct from axiom checks, which report failures instead of throwing.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Division by zero in the scalar field.
class DivisionByZero : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax or semantic error while reading textual input, with a 1-based
/// source position.  Column 0 means "whole line".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what), line(line), column(column) {}

    int line;
    int column;
};

} // namespace innertwist
