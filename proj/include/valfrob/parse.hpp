#ifndef VALFROB_PARSE_HPP
#define VALFROB_PARSE_HPP

#include <map>
#include <string>

#include "valfrob/rational_function.hpp"

namespace valfrob {

// Parses the ASCII expression grammar over the given field:
//   variables [a-z][a-z0-9]*, integer literals (reduced mod p),
//   + - * / ^ and parentheses; ^ binds tighter than *; unary minus allowed.
// In extension fields (k > 1) the reserved name `g` denotes the field
// generator.
RationalFunction rf_parse(const std::string& text, FieldRef field);

// Image of f under the field homomorphism sending each variable of f's field
// to the given rational function (all images over one common target field).
RationalFunction substitute(const RationalFunction& f,
                            const std::map<std::string, RationalFunction>& images);

}  // namespace valfrob

#endif
