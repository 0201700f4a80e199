#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbv/complex.hpp"
#include "gbv/gerstenhaber.hpp"
#include "gbv/multivector.hpp"
#include "gbv/rational.hpp"

namespace gbv {

struct LieAlgebra {
  std::vector<std::string> names;
  // c[i][j] holds the coordinates of [e_i, e_j]; filled antisymmetrically
  std::vector<std::vector<std::vector<Rational>>> c;

  int dim() const { return static_cast<int>(names.size()); }

  static LieAlgebra with_basis(std::vector<std::string> basis_names);
  void set_bracket(int i, int j, const std::vector<Rational>& value);
  Multivector<Rational> bracket(int i, int j) const;
};

// Gerstenhaber context over a finite-dimensional Lie algebra: constant
// coefficients, zero anchor. A nonzero divergence is only consistent when it
// kills brackets; divergence_character_check reports on that.
struct FiniteLieContext {
  using Scalar = Rational;

  const LieAlgebra* g = nullptr;
  std::vector<Rational> div;

  int dim() const { return g->dim(); }
  Multivector<Rational> generator_bracket(int i, int j) const { return g->bracket(i, j); }
  Rational anchor(int, const Rational&) const { return Rational(0); }
  Rational divergence(int i) const { return div.empty() ? Rational(0) : div.at(i); }
  Rational one() const { return Rational(1); }
};

struct LieBialgebra {
  std::string name;
  LieAlgebra g;
  std::vector<Multivector<Rational>> cobracket;    // delta(e_i), degree 2
  std::optional<Multivector<Rational>> r;          // set when delta = [., r]
};

std::vector<Multivector<Rational>> cobracket_from_r(const LieAlgebra& g,
                                                    const Multivector<Rational>& r);

// [-,-] applied to every degree-2 term
Multivector<Rational> contract_bracket(const LieAlgebra& g, const Multivector<Rational>& w);

// d extending delta as a degree +1 derivation
Multivector<Rational> cobracket_differential(const LieBialgebra& b,
                                             const Multivector<Rational>& a);

// the composite bracket o delta on generators
std::vector<Multivector<Rational>> biderivation(const LieBialgebra& b);

// its extension as a degree 0 derivation
Multivector<Rational> biderivation_extension(const LieBialgebra& b,
                                             const Multivector<Rational>& a);

// -[-,-](r) when r is present; the biderivation is then bracketing with it
std::optional<Multivector<Rational>> coboundary_potential(const LieBialgebra& b);

// dual Lie structure read off the cobracket coefficients
LieAlgebra dual_algebra(const LieBialgebra& b);

CheckReport jacobi_check(const LieAlgebra& g);
CheckReport divergence_character_check(const FiniteLieContext& ctx);
CheckReport cocycle_check(const LieBialgebra& b);
CheckReport co_jacobi_check(const LieBialgebra& b);
CheckReport bv_square_check(const FiniteLieContext& ctx);
CheckReport cobracket_differential_square_check(const LieBialgebra& b);

// delta_bv d + d delta_bv = -(extension of bracket o delta), degree by degree
CheckReport anticommutator_matches_biderivation_check(const LieBialgebra& b);

// when r is present, the biderivation equals bracketing with its potential
CheckReport coboundary_biderivation_check(const LieBialgebra& b);

ChainComplex build_cobracket_complex(const LieBialgebra& b);
LinearOperator biderivation_operator(const LieBialgebra& b);

std::vector<Rational> coordinates_in_degree(const Multivector<Rational>& a, int k);

// presets: aff2_trivial, aff2_case2, aff2_case3 (needs lambda != 0),
// sl2_standard, sl3_standard
std::vector<std::string> preset_names();
LieBialgebra make_preset(const std::string& name, const std::optional<Rational>& lambda);

LieBialgebra bialgebra_from_json_text(const std::string& text);
std::string bialgebra_to_json_text(const LieBialgebra& b);

}  // namespace gbv
