#pragma once

#include <stdexcept>
#include <string>

#include "extform/form.hpp"
#include "extform/lie.hpp"
#include "extform/polyform.hpp"

namespace extform {

// Parse failure with a human-readable location (byte offset or term index).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Form document: one JSON object with fields dim, degree, variance
// ("form" | "vector") and terms, a list of {indices, coeff} with strictly
// increasing 1-based indices and "num/den" rational strings. Duplicate index
// sets are rejected. serialize_form o parse_form is the identity on the
// documents serialize_form produces.
ExteriorForm parse_form(const std::string& text);
std::string serialize_form(const ExteriorForm& f);

// Structure-constant document: {dim, brackets: [{i, j, k, coeff}]} with
// i < j, 1-based.
LieAlgebra parse_lie_algebra(const std::string& text);
std::string serialize_lie_algebra(const LieAlgebra& L);

// Plain-text polynomials: terms like "3/2 x1^2 x5" joined by '+' / '-'.
Polynomial parse_polynomial(const std::string& text, int nvars);

}  // namespace extform
