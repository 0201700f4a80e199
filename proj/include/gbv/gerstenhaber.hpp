#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbv/multivector.hpp"

namespace gbv {

// A context supplies the rank, the generator brackets, the action of
// generators on coefficients (the anchor) and a divergence value per
// generator. Everything here is templated on that duck-typed interface:
//
//   using Scalar;
//   int dim() const;
//   Multivector<Scalar> generator_bracket(int i, int j) const;  // degree 1
//   Scalar anchor(int i, const Scalar& c) const;
//   Scalar divergence(int i) const;
//   Scalar one() const;
//
// Positions inside a basis monomial are 1-based in increasing index order;
// all sign conventions below are stated against that numbering.

struct CheckWitness {
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string identity;
  bool holds = true;
  long long cases = 0;
  std::optional<CheckWitness> witness;
};

namespace detail {

template <class S>
void add_scaled_monomial(Multivector<S>& out, uint64_t mask, const S& c, int sign) {
  if (sign == 0) return;
  out.add_term(mask, sign < 0 ? S(-c) : c);
}

}  // namespace detail

// Schouten bracket of two basis monomials s_coeff * e_S and t_coeff * e_T:
//
//   sum_i (-1)^{p-i} s X_{S_i}(t) e_{S\i} ^ e_T
// + sum_{i,j} (-1)^{i+j} s t [X_{S_i}, X_{T_j}] ^ e_{S\i} ^ e_{T\j}
// + (-1)^{(q-1)p+q} sum_j (-1)^{q-j} t X_{T_j}(s) e_{T\j} ^ e_S
//
// with p = |S|, q = |T|. Degree of the result is p + q - 1.
template <class Ctx, class S = typename Ctx::Scalar>
void schouten_monomials(const Ctx& ctx, uint64_t s, const S& cs, uint64_t t, const S& ct,
                        Multivector<S>& out) {
  const std::vector<int> si = mask_indices(s);
  const std::vector<int> tj = mask_indices(t);
  const int p = static_cast<int>(si.size());
  const int q = static_cast<int>(tj.size());

  for (int i = 1; i <= p; ++i) {
    S c = cs * ctx.anchor(si[i - 1], ct);
    if (is_zero(c)) continue;
    uint64_t rest = s & ~(uint64_t{1} << si[i - 1]);
    int sg = ((p - i) % 2 ? -1 : 1) * wedge_sign(rest, t);
    detail::add_scaled_monomial(out, rest | t, c, sg);
  }

  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j) {
      Multivector<S> br = ctx.generator_bracket(si[i - 1], tj[j - 1]);
      if (br.is_zero()) continue;
      uint64_t rs = s & ~(uint64_t{1} << si[i - 1]);
      uint64_t rt = t & ~(uint64_t{1} << tj[j - 1]);
      int base = ((i + j) % 2 ? -1 : 1) * wedge_sign(rs, rt);
      if (base == 0) continue;
      for (const auto& [u, cu] : br.terms()) {
        int sg = base * wedge_sign(u, rs | rt);
        detail::add_scaled_monomial(out, u | rs | rt, S(cs * ct * cu), sg);
      }
    }

  int global = (((q - 1) * p + q) % 2) ? -1 : 1;
  for (int j = 1; j <= q; ++j) {
    S c = ct * ctx.anchor(tj[j - 1], cs);
    if (is_zero(c)) continue;
    uint64_t rest = t & ~(uint64_t{1} << tj[j - 1]);
    int sg = global * ((q - j) % 2 ? -1 : 1) * wedge_sign(rest, s);
    detail::add_scaled_monomial(out, rest | s, c, sg);
  }
}

template <class Ctx, class S = typename Ctx::Scalar>
Multivector<S> schouten(const Ctx& ctx, const Multivector<S>& a, const Multivector<S>& b) {
  Multivector<S> out(ctx.dim());
  for (const auto& [s, cs] : a.terms())
    for (const auto& [t, ct] : b.terms()) schouten_monomials(ctx, s, cs, t, ct, out);
  return out;
}

// Generator of the bracket:
//
//   delta(c e_S) = sum_{i<j} (-1)^{i+j} c [X_i, X_j] ^ e_{S\{i,j}}
//                + sum_i (-1)^i (c div(X_i) + X_i(c)) e_{S\i}
template <class Ctx, class S = typename Ctx::Scalar>
Multivector<S> bv_delta(const Ctx& ctx, const Multivector<S>& a) {
  Multivector<S> out(ctx.dim());
  for (const auto& [s, c] : a.terms()) {
    const std::vector<int> si = mask_indices(s);
    const int p = static_cast<int>(si.size());
    for (int i = 1; i <= p; ++i)
      for (int j = i + 1; j <= p; ++j) {
        Multivector<S> br = ctx.generator_bracket(si[i - 1], si[j - 1]);
        if (br.is_zero()) continue;
        uint64_t rest = s & ~(uint64_t{1} << si[i - 1]) & ~(uint64_t{1} << si[j - 1]);
        int base = ((i + j) % 2 ? -1 : 1);
        for (const auto& [u, cu] : br.terms()) {
          int sg = base * wedge_sign(u, rest);
          detail::add_scaled_monomial(out, u | rest, S(c * cu), sg);
        }
      }
    for (int i = 1; i <= p; ++i) {
      S v = c * ctx.divergence(si[i - 1]) + ctx.anchor(si[i - 1], c);
      if (is_zero(v)) continue;
      uint64_t rest = s & ~(uint64_t{1} << si[i - 1]);
      detail::add_scaled_monomial(out, rest, v, i % 2 ? -1 : 1);
    }
  }
  return out;
}

// Bracket recovered from the generator. The last term vanishes whenever
// delta(1) does, but it is part of the defining formula and stays:
//
//   [a,b]_delta = (-1)^|a| delta(a^b) - (-1)^|a| delta(a)^b - a^delta(b)
//               + a^delta(1)^b
template <class Ctx, class S = typename Ctx::Scalar>
Multivector<S> bracket_from_delta(const Ctx& ctx, const Multivector<S>& a,
                                  const Multivector<S>& b) {
  Multivector<S> out(ctx.dim());
  Multivector<S> unit = Multivector<S>::monomial(ctx.dim(), 0, ctx.one());
  Multivector<S> delta_unit = bv_delta(ctx, unit);
  for (int pa = 0; pa <= ctx.dim(); ++pa) {
    Multivector<S> ap = a.degree_part(pa);
    if (ap.is_zero()) continue;
    int sa = pa % 2 ? -1 : 1;
    Multivector<S> term = bv_delta(ctx, wedge(ap, b)) - wedge(bv_delta(ctx, ap), b);
    if (sa < 0) term = -term;
    out += term;
    out -= wedge(ap, bv_delta(ctx, b));
    out += wedge(ap, wedge(delta_unit, b));
  }
  return out;
}

// Defect of delta against the product; zero exactly when delta is a
// second-order operator. For homogeneous a, b:
//
//   delta(abc) - delta(ab)c + delta(a)bc - (-1)^|a| a delta(bc)
//   - (-1)^{(|a|+1)|b|} b delta(ac) + (-1)^|a| a delta(b) c
//   + (-1)^{|a|+|b|} ab delta(c)
template <class Ctx, class S = typename Ctx::Scalar>
Multivector<S> seven_term_residual(const Ctx& ctx, const Multivector<S>& a,
                                   const Multivector<S>& b, const Multivector<S>& c) {
  int pa = a.homogeneous_degree();
  int pb = b.homogeneous_degree();
  if (pa < 0 || pb < 0) return Multivector<S>(ctx.dim());
  int sa = pa % 2 ? -1 : 1;
  int sab = (pa + pb) % 2 ? -1 : 1;
  int sba = ((pa + 1) * pb) % 2 ? -1 : 1;
  Multivector<S> ab = wedge(a, b);
  Multivector<S> out = bv_delta(ctx, wedge(ab, c));
  out -= wedge(bv_delta(ctx, ab), c);
  out += wedge(bv_delta(ctx, a), wedge(b, c));
  Multivector<S> t = wedge(a, bv_delta(ctx, wedge(b, c)));
  out -= sa < 0 ? -t : t;
  t = wedge(b, bv_delta(ctx, wedge(a, c)));
  out -= sba < 0 ? -t : t;
  t = wedge(a, wedge(bv_delta(ctx, b), c));
  out += sa < 0 ? -t : t;
  t = wedge(ab, bv_delta(ctx, c));
  out += sab < 0 ? -t : t;
  return out;
}

// [a,[b,c]] - [[a,b],c] - (-1)^{(|a|-1)(|b|-1)} [b,[a,c]] for homogeneous a, b
template <class Ctx, class S = typename Ctx::Scalar>
Multivector<S> graded_jacobi_residual(const Ctx& ctx, const Multivector<S>& a,
                                      const Multivector<S>& b, const Multivector<S>& c) {
  int pa = a.homogeneous_degree();
  int pb = b.homogeneous_degree();
  if (pa < 0 || pb < 0) return Multivector<S>(ctx.dim());
  int sg = ((pa - 1) * (pb - 1)) % 2 ? -1 : 1;
  Multivector<S> out = schouten(ctx, a, schouten(ctx, b, c));
  out -= schouten(ctx, schouten(ctx, a, b), c);
  Multivector<S> t = schouten(ctx, b, schouten(ctx, a, c));
  out -= sg < 0 ? -t : t;
  return out;
}

// [a, b^c] - [a,b]^c - (-1)^{(|a|-1)|b|} b^[a,c] for homogeneous a, b
template <class Ctx, class S = typename Ctx::Scalar>
Multivector<S> right_leibniz_residual(const Ctx& ctx, const Multivector<S>& a,
                                      const Multivector<S>& b, const Multivector<S>& c) {
  int pa = a.homogeneous_degree();
  int pb = b.homogeneous_degree();
  if (pa < 0 || pb < 0) return Multivector<S>(ctx.dim());
  int sg = ((pa - 1) * pb) % 2 ? -1 : 1;
  Multivector<S> out = schouten(ctx, a, wedge(b, c));
  out -= wedge(schouten(ctx, a, b), c);
  Multivector<S> t = wedge(b, schouten(ctx, a, c));
  out -= sg < 0 ? -t : t;
  return out;
}

// [a^b, c] - a^[b,c] - (-1)^{(|c|-1)|b|} [a,c]^b for homogeneous b, c
template <class Ctx, class S = typename Ctx::Scalar>
Multivector<S> left_leibniz_residual(const Ctx& ctx, const Multivector<S>& a,
                                     const Multivector<S>& b, const Multivector<S>& c) {
  int pb = b.homogeneous_degree();
  int pc = c.homogeneous_degree();
  if (pb < 0 || pc < 0) return Multivector<S>(ctx.dim());
  int sg = ((pc - 1) * pb) % 2 ? -1 : 1;
  Multivector<S> out = schouten(ctx, wedge(a, b), c);
  out -= wedge(a, schouten(ctx, b, c));
  Multivector<S> t = wedge(schouten(ctx, a, c), b);
  out -= sg < 0 ? -t : t;
  return out;
}

// [a,b] + (-1)^{(|a|-1)(|b|-1)} [b,a] for homogeneous a, b
template <class Ctx, class S = typename Ctx::Scalar>
Multivector<S> shifted_antisymmetry_residual(const Ctx& ctx, const Multivector<S>& a,
                                             const Multivector<S>& b) {
  int pa = a.homogeneous_degree();
  int pb = b.homogeneous_degree();
  if (pa < 0 || pb < 0) return Multivector<S>(ctx.dim());
  int sg = ((pa - 1) * (pb - 1)) % 2 ? -1 : 1;
  Multivector<S> t = schouten(ctx, b, a);
  return schouten(ctx, a, b) + (sg < 0 ? -t : t);
}

// Coefficient-linear extension of a degree-d map given on generators,
// as a derivation:  D(v1^...^vk) = sum_i (-1)^{d(i-1)} v1^...^D(v_i)^...^vk.
template <class S>
Multivector<S> extend_derivation(const std::vector<Multivector<S>>& values, int value_shift,
                                 const Multivector<S>& a) {
  if (values.empty()) throw std::invalid_argument("no generator values");
  int dim = values.front().dim();
  Multivector<S> out(dim);
  for (const auto& [s, c] : a.terms()) {
    const std::vector<int> si = mask_indices(s);
    for (size_t i = 0; i < si.size(); ++i) {
      int pos_sign = (value_shift * static_cast<int>(i)) % 2 ? -1 : 1;
      uint64_t below = s & ((uint64_t{1} << si[i]) - 1);
      uint64_t above = s & ~((uint64_t{1} << (si[i] + 1)) - 1);
      for (const auto& [u, cu] : values.at(si[i]).terms()) {
        int sg = pos_sign * wedge_sign(below, u);
        if (sg == 0) continue;
        sg *= wedge_sign(below | u, above);
        detail::add_scaled_monomial(out, below | u | above, S(c * cu), sg);
      }
    }
  }
  return out;
}

}  // namespace gbv
