// JSON and LaTeX renderings of polynomials.  The JSON shape is the
// interchange format for CLI output and golden-test fixtures.
#pragma once

#include <string>

#include "json.hpp"
#include "macpoly/polyring.hpp"

namespace macpoly {

// {"n": int, "params": [symbols], "terms": [{"exp": [ints], "coeff": str}]},
// terms in display order (descending graded-lex), coefficients in the
// canonical string form.
nlohmann::ordered_json poly_to_json(const Polynomial& f);

// Coefficient as \frac{num}{den} (plain num when den == 1), expanded sums
// kept in the canonical term order; alpha becomes \alpha.
std::string latex_coefficient(const RationalFunction& c);

std::string poly_to_latex(const Polynomial& f);

}  // namespace macpoly
