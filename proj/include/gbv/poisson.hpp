#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gbv/complex.hpp"
#include "gbv/gerstenhaber.hpp"
#include "gbv/multivector.hpp"
#include "gbv/poly.hpp"

namespace gbv {

// Gerstenhaber context for polynomial multivector fields on affine n-space:
// generators are the coordinate frame fields, which commute; the anchor is
// partial differentiation. A nonzero shift makes the divergence that of the
// volume form scaled by exp of the shift, which is how repaired generators
// are produced: divergence(i) = d(shift)/dx_i.
struct PolyContext {
  using Scalar = Poly;

  int n = 0;
  Poly shift;

  PolyContext() = default;
  explicit PolyContext(int nvars) : n(nvars), shift(nvars) {}
  PolyContext(int nvars, Poly a0) : n(nvars), shift(std::move(a0)) {
    if (shift.nvars() != n) throw std::invalid_argument("shift variable count mismatch");
  }

  int dim() const { return n; }
  Multivector<Poly> generator_bracket(int, int) const { return Multivector<Poly>(n); }
  Poly anchor(int i, const Poly& f) const { return f.derivative(i); }
  Poly divergence(int i) const { return shift.derivative(i); }
  Poly one() const { return Poly::constant(n, 1); }
};

// [pi, pi]; a bivector is Poisson exactly when this vanishes
Multivector<Poly> jacobiator(const PolyContext& ctx, const Multivector<Poly>& pi);

// the divergence of pi under the context's volume: bv_delta applied to pi
Multivector<Poly> modular_field(const PolyContext& ctx, const Multivector<Poly>& pi);

// Monomial basis x^e ^ frame_mask of one exterior degree with coefficient
// degree bounded by max_coeff_degree, ordered by frame monomial first, then
// by ascending coefficient degree and descending exponent lex.
struct WindowBasisElement {
  uint64_t mask;
  std::vector<int> exps;
};

struct WindowBasis {
  int n = 0;
  int degree = 0;
  int max_coeff_degree = 0;
  std::vector<WindowBasisElement> elems;
  std::map<std::pair<uint64_t, std::vector<int>>, int> index;

  int size() const { return static_cast<int>(elems.size()); }
};

WindowBasis window_basis(int n, int degree, int max_coeff_degree);

// throws std::domain_error when a term falls outside the window
std::vector<Rational> window_coordinates(const Multivector<Poly>& a, const WindowBasis& basis);

Multivector<Poly> from_window_coordinates(const std::vector<Rational>& coords,
                                          const WindowBasis& basis);

// Complex of multivector fields under [pi, -] with C^k cut at coefficient
// degree window + k. That cut is closed under the differential when the
// coefficients of pi have degree at most two; otherwise this throws
// std::invalid_argument.
ChainComplex truncated_poisson_complex(const PolyContext& ctx, const Multivector<Poly>& pi,
                                       int window);

struct ModularProbe {
  bool exact = false;
  Poly witness;   // [pi, witness] equals the modular field when exact
  int window = 0;
};

// Searches coefficient degree <= window for a potential of the modular
// field. An exact answer certifies unimodularity after repairing by the
// negated witness; a failed search is only a bound, and is reported as such.
ModularProbe unimodularity_probe(const PolyContext& ctx, const Multivector<Poly>& pi, int window);

}  // namespace gbv
