#include "gbv/poisson.hpp"

#include <algorithm>
#include <stdexcept>

#include "gbv/linalg.hpp"
#include "gbv/textio.hpp"

namespace gbv {

Multivector<Poly> jacobiator(const PolyContext& ctx, const Multivector<Poly>& pi) {
  return schouten(ctx, pi, pi);
}

Multivector<Poly> modular_field(const PolyContext& ctx, const Multivector<Poly>& pi) {
  return bv_delta(ctx, pi);
}

namespace {

void exponents_rec(int nvars, int var, int remaining, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (var == nvars - 1) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = e;
    exponents_rec(nvars, var + 1, remaining - e, cur, out);
  }
}

// total degree ascending, x-major within a degree
std::vector<std::vector<int>> exponents_up_to(int nvars, int maxdeg) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(nvars, 0);
  for (int d = 0; d <= maxdeg; ++d) exponents_rec(nvars, 0, d, cur, out);
  return out;
}

}  // namespace

WindowBasis window_basis(int n, int degree, int max_coeff_degree) {
  if (n < 1) throw std::invalid_argument("need at least one variable");
  if (max_coeff_degree < 0) throw std::invalid_argument("negative coefficient degree bound");
  WindowBasis basis;
  basis.n = n;
  basis.degree = degree;
  basis.max_coeff_degree = max_coeff_degree;
  std::vector<std::vector<int>> exps = exponents_up_to(n, max_coeff_degree);
  for (uint64_t mask : basis_masks(n, degree))
    for (const auto& e : exps) {
      basis.index[{mask, e}] = basis.size();
      basis.elems.push_back({mask, e});
    }
  return basis;
}

std::vector<Rational> window_coordinates(const Multivector<Poly>& a, const WindowBasis& basis) {
  std::vector<Rational> out(basis.size(), Rational(0));
  for (const auto& [mask, poly] : a.terms())
    for (const auto& [exps, coeff] : poly.terms()) {
      auto it = basis.index.find({mask, exps});
      if (it == basis.index.end())
        throw std::domain_error("element does not fit the coefficient window");
      out[it->second] = coeff;
    }
  return out;
}

Multivector<Poly> from_window_coordinates(const std::vector<Rational>& coords,
                                          const WindowBasis& basis) {
  if (static_cast<int>(coords.size()) != basis.size())
    throw std::invalid_argument("coordinate length mismatch");
  Multivector<Poly> out(basis.n);
  for (int i = 0; i < basis.size(); ++i) {
    if (is_zero(coords[i])) continue;
    out.add_term(basis.elems[i].mask, Poly::monomial(basis.n, basis.elems[i].exps, coords[i]));
  }
  return out;
}

ChainComplex truncated_poisson_complex(const PolyContext& ctx, const Multivector<Poly>& pi,
                                       int window) {
  if (window < 0) throw std::invalid_argument("window must be nonnegative");
  for (const auto& [mask, poly] : pi.terms())
    if (poly.total_degree() > 2)
      throw std::invalid_argument(
          "coefficient degree of the bivector exceeds the truncation closure bound");
  int n = ctx.n;
  ChainComplex c;
  c.dims.resize(n + 1);
  c.labels.resize(n + 1);
  std::vector<WindowBasis> bases;
  for (int k = 0; k <= n; ++k) {
    bases.push_back(window_basis(n, k, window + k));
    c.dims[k] = bases[k].size();
    for (const auto& el : bases[k].elems) {
      Multivector<Poly> mono =
          Multivector<Poly>::monomial(n, el.mask, Poly::monomial(n, el.exps, 1));
      c.labels[k].push_back(multivector_str(mono, frame_names(n), poly_var_names(n)));
    }
  }
  for (int k = 0; k < n; ++k) {
    QMatrix d(c.dims[k + 1], c.dims[k]);
    for (int col = 0; col < c.dims[k]; ++col) {
      const auto& el = bases[k].elems[col];
      Multivector<Poly> image = schouten(
          ctx, pi, Multivector<Poly>::monomial(n, el.mask, Poly::monomial(n, el.exps, 1)));
      std::vector<Rational> coords = window_coordinates(image, bases[k + 1]);
      for (int row = 0; row < c.dims[k + 1]; ++row) d.at(row, col) = coords[row];
    }
    c.d.push_back(std::move(d));
  }
  return c;
}

ModularProbe unimodularity_probe(const PolyContext& ctx, const Multivector<Poly>& pi,
                                 int window) {
  ModularProbe probe;
  probe.window = window;
  probe.witness = Poly(ctx.n);
  Multivector<Poly> x = modular_field(ctx, pi);
  if (x.is_zero()) {
    probe.exact = true;
    return probe;
  }
  int pideg = 0;
  for (const auto& [mask, poly] : pi.terms()) pideg = std::max(pideg, poly.total_degree());
  WindowBasis source = window_basis(ctx.n, 0, window);
  WindowBasis target = window_basis(ctx.n, 1, window + std::max(1, pideg - 1));
  std::vector<Rational> rhs = window_coordinates(x, target);
  QMatrix d0(target.size(), source.size());
  for (int col = 0; col < source.size(); ++col) {
    const auto& el = source.elems[col];
    Multivector<Poly> image = schouten(
        ctx, pi, Multivector<Poly>::monomial(ctx.n, el.mask, Poly::monomial(ctx.n, el.exps, 1)));
    std::vector<Rational> coords = window_coordinates(image, target);
    for (int row = 0; row < target.size(); ++row) d0.at(row, col) = coords[row];
  }
  auto sol = solve(d0, rhs);
  if (!sol) return probe;
  probe.exact = true;
  for (int i = 0; i < source.size(); ++i)
    if (!is_zero((*sol)[i]))
      probe.witness += Poly::monomial(ctx.n, source.elems[i].exps, (*sol)[i]);
  return probe;
}

}  // namespace gbv
