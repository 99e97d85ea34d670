#pragma once

// Text input for the two expression languages the command-line tool accepts:
// abstract expressions in the generators A, B, C, D, alpha, beta, gamma, delta,
// OmegaA, OmegaB, OmegaC, and concrete tensor elements in a, b, c, x, y, z,
// e, h, f, Lambda, nu_x, nu_z, w.  The grammar is the usual one:
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := factor (('*' | 'ox' | juxtaposition) factor)*
//   factor  := primary ['^' integer]
//   primary := rational | identifier | '(' expr ')'
//            | '[' expr ',' expr ']'        (commutator)
//            | '{' expr ',' expr '}'        (anticommutator)
//
// Rationals may be written 3, -3, or 3/4.  'ox' and a literal "⊗" both mean
// multiplication; so does juxtaposition of two primaries.  Which language an
// input belongs to is decided by the identifiers it uses; mixing the two
// alphabets in one input is an error.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>

#include "racah/racah_expr.hpp"
#include "racah/tensor.hpp"

namespace racah {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& message, std::size_t pos)
      : std::runtime_error(message + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

using ParsedInput = std::variant<RacahExpr, TensorElement>;

// Throws ParseError on malformed input.
ParsedInput parse_input(const std::string& text);

// Convenience wrappers that additionally require the given language.
RacahExpr parse_racah(const std::string& text);
TensorElement parse_tensor(const std::string& text);

}  // namespace racah
