#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gbv/multivector.hpp"
#include "gbv/poly.hpp"
#include "gbv/rational.hpp"

namespace gbv {

// x, y, z for up to three variables, x1..xn beyond that
std::vector<std::string> poly_var_names(int n);

// matching frame names dx, dy, dz / dx1..dxn
std::vector<std::string> frame_names(int n);

// "x1^h1" for a basis monomial, "1" for the empty one
std::string monomial_label(uint64_t mask, const std::vector<std::string>& names);

// Terms come out in (degree, lex) order joined by " + ", each as
// "coeff * e1^e2", with the sign folded into the coefficient. Degree-zero
// terms are a bare rational. The zero element prints as "0".
std::string multivector_str(const Multivector<Rational>& a,
                            const std::vector<std::string>& names);

// Polynomial coefficients are always parenthesized: "(x^2 + y^2) * dx^dy".
std::string multivector_str(const Multivector<Poly>& a,
                            const std::vector<std::string>& frames,
                            const std::vector<std::string>& vars);

// "x^2 + y^2", "3*x^2*y + -2*y", constants as bare rationals, zero as "0"
std::string poly_str(const Poly& p, const std::vector<std::string>& vars);

// Expression parser for polynomial multivectors over the standard variable
// and frame names: sums, products, unary minus, parentheses, integer powers
// of scalars, and ^ as the wedge between frame factors. Examples:
//   "(x^2 + y^2) * dx^dy"      "x*y*dx + 2/3 * dy"      "-dx^dy"
// Throws std::invalid_argument on malformed input or unknown names.
Multivector<Poly> parse_poly_multivector(const std::string& text, int nvars);

// same grammar restricted to scalars
Poly parse_poly(const std::string& text, int nvars);

}  // namespace gbv
