#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "nilcx/structure_equations.hpp"

namespace nilcx {

// Plain-text complex structure equations (.ceq), indices 1-based:
//
//   dim 8                            real dimension, even
//   pairing 4,8;3,7;2,6;1,5          optional; J e_x = e_y for each x,y
//   dw1 = 0
//   dw2 = (i) w1^-1 + (-1) w1^4 + (1) w1^-4
//   dw-2 = ...                       optional conjugate line, checked
//
// Terms are "(c) wA^B" for w^{AB}, "(c) wA^-B" for w^{A Bbar} and "(c) w-A^-B" for
// w^{Abar Bbar}, joined by '+' or '-'; the coefficient is optional. Missing dw lines are 0.

struct EquationDocument {
    ComplexEquations equations;
    std::optional<Pairing> pairing;  // 0-based

    friend bool operator==(const EquationDocument&, const EquationDocument&) = default;
};

/// Throws ParseError (Syntax, IndexOutOfRange, ConjugationInconsistent, BadPairing).
EquationDocument parse_equations(std::string_view text);
EquationDocument read_equations_file(const std::string& path);

/// Canonical text; parse_equations(print_equations(d)) == d.
std::string print_equations(const EquationDocument& doc);
/// Right-hand side of one equation, "0" when zero.
std::string format_two_form(const ComplexTwoForm& form);

/// "4,8;3,7" (1-based) <-> pairing (0-based). Throws Error(BadPairing) on malformed text.
Pairing parse_pairing(std::string_view text);
std::string format_pairing(const Pairing& pairing);

}  // namespace nilcx
