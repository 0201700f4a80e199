#include "doctest.h"

#include "gbv/textio.hpp"

using namespace gbv;

using MV = Multivector<Rational>;
using PV = Multivector<Poly>;

TEST_CASE("rational multivector formatting") {
  std::vector<std::string> names = {"h", "x"};
  MV a(2);
  CHECK(multivector_str(a, names) == "0");
  a.add_term(0b01, Rational(1));
  CHECK(multivector_str(a, names) == "1 * h");
  a.add_term(0b11, Rational(-3, 2));
  CHECK(multivector_str(a, names) == "1 * h + -3/2 * h^x");
  MV c(2);
  c.add_term(0, Rational(2, 3));
  CHECK(multivector_str(c, names) == "2/3");
}

TEST_CASE("polynomial formatting") {
  std::vector<std::string> vars = poly_var_names(2);
  Poly x = Poly::variable(2, 0);
  Poly y = Poly::variable(2, 1);
  CHECK(poly_str(x * x + y * y, vars) == "x^2 + y^2");
  CHECK(poly_str(-x, vars) == "-x");
  CHECK(poly_str(x * x * y * Poly::constant(2, 3) - y - y, vars) == "3*x^2*y + -2*y");
  CHECK(poly_str(Poly::constant(2, Rational(5, 2)), vars) == "5/2");
  CHECK(poly_str(Poly(2), vars) == "0");
  // x-major display order
  CHECK(poly_str(y * y + x * y + x, vars) == "x*y + x + y^2");
}

TEST_CASE("polynomial multivector formatting") {
  std::vector<std::string> vars = poly_var_names(2);
  std::vector<std::string> frames = frame_names(2);
  Poly x = Poly::variable(2, 0);
  Poly y = Poly::variable(2, 1);
  PV a = PV::monomial(2, 0b11, x * x + y * y);
  CHECK(multivector_str(a, frames, vars) == "(x^2 + y^2) * dx^dy");
  PV b = PV::monomial(2, 0b01, y.scaled(2)) + PV::monomial(2, 0b10, x.scaled(-2));
  CHECK(multivector_str(b, frames, vars) == "(2*y) * dx + (-2*x) * dy");
  PV c = PV::monomial(2, 0, x);
  CHECK(multivector_str(c, frames, vars) == "(x)");
}

TEST_CASE("variable and frame names") {
  CHECK(poly_var_names(3) == std::vector<std::string>{"x", "y", "z"});
  CHECK(frame_names(2) == std::vector<std::string>{"dx", "dy"});
  CHECK(poly_var_names(4) == std::vector<std::string>{"x1", "x2", "x3", "x4"});
  CHECK(frame_names(4)[3] == "dx4");
  CHECK(monomial_label(0, {"a"}) == "1");
  CHECK(monomial_label(0b101, {"x", "h", "y"}) == "x^y");
}

TEST_CASE("parser round trips") {
  std::vector<std::string> vars = poly_var_names(2);
  std::vector<std::string> frames = frame_names(2);
  for (const char* text : {"(x^2 + y^2) * dx^dy", "(2*y) * dx + (-2*x) * dy", "(x*y)",
                           "(-1) * dx^dy", "(1/3)"}) {
    PV v = parse_poly_multivector(text, 2);
    CHECK(multivector_str(v, frames, vars) == text);
  }
}

TEST_CASE("parser structure") {
  Poly x = Poly::variable(2, 0);
  Poly y = Poly::variable(2, 1);
  CHECK(parse_poly("x^2 + y^2", 2) == x * x + y * y);
  CHECK(parse_poly("(x + y)^3", 2) == (x + y) * (x + y) * (x + y));
  CHECK(parse_poly("2/3 * x", 2) == x.scaled(Rational(2, 3)));
  CHECK(parse_poly("-x + 1", 2) == Poly::constant(2, 1) - x);
  PV v = parse_poly_multivector("x*y*dx + 2/3 * dy", 2);
  CHECK(v == PV::monomial(2, 0b01, x * y) + PV::monomial(2, 0b10, Poly::constant(2, Rational(2, 3))));
  CHECK(parse_poly_multivector("-dx^dy", 2) == PV::monomial(2, 0b11, Poly::constant(2, -1)));
  CHECK(parse_poly_multivector("dy^dx", 2) == PV::monomial(2, 0b11, Poly::constant(2, -1)));
  CHECK(parse_poly_multivector("dx^dx", 2).is_zero());
  CHECK(parse_poly_multivector("z * dz", 3) ==
        PV::monomial(3, 0b100, Poly::variable(3, 2)));
}

TEST_CASE("parser rejects bad input") {
  CHECK_THROWS_AS(parse_poly_multivector("w", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_multivector("dx^x", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_multivector("x^(1/2)", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_multivector("x^-1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_multivector("x +", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_multivector("(x", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_multivector("1/0", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_multivector("x $ y", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("x * dx", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_multivector("z", 2), std::invalid_argument);
}
