#pragma once

#include "qrs/presentations.hpp"

namespace qrs {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " at offset " + std::to_string(pos)),
          position(pos) {}
};

struct UnknownSymbol : ParseError {
    UnknownSymbol(const std::string& name, size_t pos)
        : ParseError("unknown symbol '" + name + "'", pos) {}
};

// Parses "e1*e2 - r^2*e2*e1" style expressions into the free algebra.
// Grammar: expr := ['-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := base ('^' int)?; base := name | rational | '(' expr ')'.
// '^' binds tighter than '*' binds tighter than '+'; juxtaposition is not
// multiplication. Named elements expand per-algebra; negative powers are
// only available on scalar r/s-monomials.
FreeElement parse(const std::string& text, const Presentation& p);

}  // namespace qrs
