#pragma once

#include <string>
#include <vector>

#include "germ/forms.hpp"
#include "germ/poly.hpp"

namespace germ {

// Expression grammar: integers, rationals a/b, variable names, + - * ^ and
// parentheses; no implicit multiplication between factors. line0 offsets the
// line reported in ParseError for text embedded in a larger document.
Poly parse_poly(const std::string& text, const RingPtr& ring, int line0 = 1);

// Comma-separated expressions (diffeomorphism or vector-field components).
std::vector<Poly> parse_poly_list(const std::string& text, const RingPtr& ring,
                                  int line0 = 1);

// Sum of form terms `<coeff> d<var>[^d<var>...]`; a term without a d-block
// is a 0-form, and all terms must have the same degree.
PForm parse_form(const std::string& text, const RingPtr& ring, int line0 = 1);

}  // namespace germ
