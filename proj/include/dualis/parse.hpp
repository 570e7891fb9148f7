#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dualis/groebner.hpp"

namespace dualis {

struct SourcePos {
    int line = 1;
    int column = 1;
};

class ParseError : public Error {
public:
    ParseError(ErrorCode code, SourcePos pos, const std::string& message)
        : Error(code, std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
          pos_(pos) {}

    SourcePos position() const { return pos_; }

private:
    SourcePos pos_;
};

/// A parsed ideal file: ring declaration, polynomial list, and the
/// comment label lines that preceded the declarations.
struct IdealDocument {
    Ring ring;
    std::vector<Polynomial> polynomials;
    std::vector<std::string> labels;

    Ideal to_ideal() const { return Ideal(ring, polynomials); }
};

/// Grammar:
///   document   := ring_decl ideal_decl
///   ring_decl  := "ring" name+ ";"
///   ideal_decl := "ideal" "=" poly (";" poly)* ";"?
///   poly       := ["-"] term (("+"|"-") term)*
///   term       := factor ("*" factor)*
///   factor     := base ["^" nat]
///   base       := rational | name | "(" poly ")"
///   rational   := nat ["/" nat_nonzero]
/// Whitespace is insignificant, "#" starts a comment to end of line,
/// multiplication is always explicit. Polynomials are normalized under
/// DegRevLex.
IdealDocument parse_ideal(std::string_view text);

/// A single poly production against an existing ring.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

/// True for names the parser refuses: leading '@', "lambda" with an
/// optional digit suffix, and "u" with a digit suffix (the internally
/// generated auxiliary names).
bool is_reserved_name(std::string_view name);

} // namespace dualis
