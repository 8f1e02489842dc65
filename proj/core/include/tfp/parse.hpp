#pragma once

#include <string>

#include "tfp/polynomial.hpp"

namespace tfp {

// Polynomial grammar (whitespace ignored):
//   polynomial ::= ['-'] term (('+'|'-') term)*
//   term       ::= coeff | [coeff '*'] factor ('*' factor)*
//   factor     ::= var ['^' uint]
//   coeff      ::= uint ['/' uint]
//   var        ::= tag ('_' uint)+
Polynomial parse_polynomial(const std::string& text, const RingSpec& ring);

/// Canonical text form: terms in descending grevlex order, factors in ring
/// variable order; reparses to an equal polynomial.
std::string to_string(const Polynomial& f);

std::string to_string(const Monomial& m, const RingSpec& ring);

}  // namespace tfp
