#include <optional>
#include <stdexcept>
#include <string>

#include "gbv/lie.hpp"

namespace gbv {

namespace {

LieAlgebra make_aff2() {
  LieAlgebra g = LieAlgebra::with_basis({"h", "x"});
  g.set_bracket(0, 1, {Rational(0), Rational(1)});  // [h,x] = x
  return g;
}

LieAlgebra make_sl2() {
  LieAlgebra g = LieAlgebra::with_basis({"x", "h", "y"});
  g.set_bracket(0, 1, {Rational(-2), Rational(0), Rational(0)});  // [x,h] = -2x
  g.set_bracket(0, 2, {Rational(0), Rational(1), Rational(0)});   // [x,y] = h
  g.set_bracket(1, 2, {Rational(0), Rational(0), Rational(-2)});  // [h,y] = -2y
  return g;
}

LieAlgebra make_sl3() {
  LieAlgebra g = LieAlgebra::with_basis({"x1", "x2", "x3", "h1", "h2", "y1", "y2", "y3"});
  auto unit = [&](int k, const Rational& c) {
    std::vector<Rational> v(8, Rational(0));
    v[k] = c;
    return v;
  };
  auto two = [&](int k1, const Rational& c1, int k2, const Rational& c2) {
    std::vector<Rational> v(8, Rational(0));
    v[k1] = c1;
    v[k2] = c2;
    return v;
  };
  // x1 = E12, x2 = E23, x3 = E13, h1 = E11-E22, h2 = E22-E33,
  // y1 = E21, y2 = E32, y3 = E31
  g.set_bracket(0, 1, unit(2, 1));       // [x1,x2] = x3
  g.set_bracket(0, 5, unit(3, 1));       // [x1,y1] = h1
  g.set_bracket(1, 6, unit(4, 1));       // [x2,y2] = h2
  g.set_bracket(2, 7, two(3, 1, 4, 1));  // [x3,y3] = h1 + h2
  g.set_bracket(0, 7, unit(6, -1));      // [x1,y3] = -y2
  g.set_bracket(1, 7, unit(5, 1));       // [x2,y3] = y1
  g.set_bracket(2, 5, unit(1, -1));      // [x3,y1] = -x2
  g.set_bracket(2, 6, unit(0, 1));       // [x3,y2] = x1
  g.set_bracket(5, 6, unit(7, -1));      // [y1,y2] = -y3
  g.set_bracket(3, 0, unit(0, 2));       // [h1,x1] = 2x1
  g.set_bracket(3, 1, unit(1, -1));      // [h1,x2] = -x2
  g.set_bracket(3, 2, unit(2, 1));       // [h1,x3] = x3
  g.set_bracket(4, 0, unit(0, -1));      // [h2,x1] = -x1
  g.set_bracket(4, 1, unit(1, 2));       // [h2,x2] = 2x2
  g.set_bracket(4, 2, unit(2, 1));       // [h2,x3] = x3
  g.set_bracket(3, 5, unit(5, -2));      // [h1,y1] = -2y1
  g.set_bracket(3, 6, unit(6, 1));       // [h1,y2] = y2
  g.set_bracket(3, 7, unit(7, -1));      // [h1,y3] = -y3
  g.set_bracket(4, 5, unit(5, 1));       // [h2,y1] = y1
  g.set_bracket(4, 6, unit(6, -2));      // [h2,y2] = -2y2
  g.set_bracket(4, 7, unit(7, -1));      // [h2,y3] = -y3
  return g;
}

Multivector<Rational> wedge_pair(int dim, int i, int j, const Rational& c) {
  return Multivector<Rational>::monomial(dim, (uint64_t{1} << i) | (uint64_t{1} << j), c);
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"aff2_trivial", "aff2_case2", "aff2_case3", "sl2_standard", "sl3_standard"};
}

LieBialgebra make_preset(const std::string& name, const std::optional<Rational>& lambda) {
  if (name != "aff2_case3" && lambda)
    throw std::invalid_argument("lambda only applies to the aff2_case3 preset");
  LieBialgebra b;
  b.name = name;
  if (name == "aff2_trivial") {
    b.g = make_aff2();
    b.cobracket.assign(2, Multivector<Rational>(2));
    return b;
  }
  if (name == "aff2_case2") {
    b.g = make_aff2();
    b.r = wedge_pair(2, 0, 1, 1);  // h^x
    b.cobracket = cobracket_from_r(b.g, *b.r);
    return b;
  }
  if (name == "aff2_case3") {
    if (!lambda) throw std::invalid_argument("aff2_case3 needs --lambda");
    if (is_zero(*lambda))
      throw std::invalid_argument("aff2_case3 needs a nonzero lambda; zero gives the trivial case");
    b.g = make_aff2();
    b.cobracket.assign(2, Multivector<Rational>(2));
    b.cobracket[1] = wedge_pair(2, 0, 1, *lambda);  // delta(x) = lambda h^x
    return b;
  }
  if (name == "sl2_standard") {
    b.g = make_sl2();
    b.r = wedge_pair(3, 0, 2, 1);  // x^y
    b.cobracket = cobracket_from_r(b.g, *b.r);
    return b;
  }
  if (name == "sl3_standard") {
    b.g = make_sl3();
    Multivector<Rational> r(8);
    r += wedge_pair(8, 0, 5, 1);
    r += wedge_pair(8, 1, 6, 1);
    r += wedge_pair(8, 2, 7, 1);
    b.r = r;
    b.cobracket = cobracket_from_r(b.g, *b.r);
    return b;
  }
  throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace gbv
