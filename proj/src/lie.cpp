#include "gbv/lie.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "gbv/textio.hpp"

namespace gbv {

LieAlgebra LieAlgebra::with_basis(std::vector<std::string> basis_names) {
  if (basis_names.empty()) throw std::invalid_argument("empty basis");
  if (basis_names.size() > 32) throw std::invalid_argument("basis too large");
  std::set<std::string> seen;
  for (const auto& n : basis_names) {
    if (n.empty()) throw std::invalid_argument("empty basis name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate basis name '" + n + "'");
  }
  LieAlgebra g;
  g.names = std::move(basis_names);
  int n = g.dim();
  g.c.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
  return g;
}

void LieAlgebra::set_bracket(int i, int j, const std::vector<Rational>& value) {
  int n = dim();
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("generator index out of range");
  if (i == j) throw std::invalid_argument("bracket of a generator with itself is zero");
  if (static_cast<int>(value.size()) != n) throw std::invalid_argument("bracket value length mismatch");
  c[i][j] = value;
  c[j][i].resize(n);
  for (int k = 0; k < n; ++k) c[j][i][k] = -value[k];
}

Multivector<Rational> LieAlgebra::bracket(int i, int j) const {
  Multivector<Rational> out(dim());
  for (int k = 0; k < dim(); ++k) out.add_term(uint64_t{1} << k, c[i][j][k]);
  return out;
}

std::vector<Multivector<Rational>> cobracket_from_r(const LieAlgebra& g,
                                                    const Multivector<Rational>& r) {
  FiniteLieContext ctx{&g, {}};
  std::vector<Multivector<Rational>> out;
  for (int i = 0; i < g.dim(); ++i)
    out.push_back(schouten(ctx, Multivector<Rational>::monomial(g.dim(), uint64_t{1} << i, 1), r));
  return out;
}

Multivector<Rational> contract_bracket(const LieAlgebra& g, const Multivector<Rational>& w) {
  Multivector<Rational> out(g.dim());
  for (const auto& [mask, coeff] : w.terms()) {
    std::vector<int> idx = mask_indices(mask);
    if (idx.size() != 2) throw std::invalid_argument("contract_bracket needs degree-two input");
    out += g.bracket(idx[0], idx[1]).scaled(coeff);
  }
  return out;
}

Multivector<Rational> cobracket_differential(const LieBialgebra& b,
                                             const Multivector<Rational>& a) {
  return extend_derivation(b.cobracket, 1, a);
}

std::vector<Multivector<Rational>> biderivation(const LieBialgebra& b) {
  std::vector<Multivector<Rational>> out;
  for (int i = 0; i < b.g.dim(); ++i) out.push_back(contract_bracket(b.g, b.cobracket[i]));
  return out;
}

Multivector<Rational> biderivation_extension(const LieBialgebra& b,
                                             const Multivector<Rational>& a) {
  return extend_derivation(biderivation(b), 0, a);
}

std::optional<Multivector<Rational>> coboundary_potential(const LieBialgebra& b) {
  if (!b.r) return std::nullopt;
  return -contract_bracket(b.g, *b.r);
}

LieAlgebra dual_algebra(const LieBialgebra& b) {
  int n = b.g.dim();
  std::vector<std::string> names;
  for (const auto& s : b.g.names) names.push_back(s + "*");
  LieAlgebra dual = LieAlgebra::with_basis(std::move(names));
  for (int a = 0; a < n; ++a)
    for (int bb = a + 1; bb < n; ++bb) {
      std::vector<Rational> value(n, Rational(0));
      uint64_t mask = (uint64_t{1} << a) | (uint64_t{1} << bb);
      for (int k = 0; k < n; ++k) {
        auto it = b.cobracket[k].terms().find(mask);
        if (it != b.cobracket[k].terms().end()) value[k] = it->second;
      }
      dual.set_bracket(a, bb, value);
    }
  return dual;
}

namespace {

Multivector<Rational> generator(const LieAlgebra& g, int i) {
  return Multivector<Rational>::monomial(g.dim(), uint64_t{1} << i, 1);
}

}  // namespace

CheckReport jacobi_check(const LieAlgebra& g) {
  CheckReport rep;
  rep.identity = "[[a,b],c] + [[b,c],a] + [[c,a],b] = 0";
  FiniteLieContext ctx{&g, {}};
  int n = g.dim();
  for (int i = 0; i < n && rep.holds; ++i)
    for (int j = i + 1; j < n && rep.holds; ++j)
      for (int k = j + 1; k < n; ++k) {
        ++rep.cases;
        Multivector<Rational> sum =
            schouten(ctx, g.bracket(i, j), generator(g, k)) +
            schouten(ctx, g.bracket(j, k), generator(g, i)) +
            schouten(ctx, g.bracket(k, i), generator(g, j));
        if (!sum.is_zero()) {
          rep.holds = false;
          rep.witness = CheckWitness{
              "(" + g.names[i] + ", " + g.names[j] + ", " + g.names[k] + ")",
              multivector_str(sum, g.names), "0"};
          break;
        }
      }
  return rep;
}

CheckReport divergence_character_check(const FiniteLieContext& ctx) {
  CheckReport rep;
  rep.identity = "div([a,b]) = 0";
  const LieAlgebra& g = *ctx.g;
  for (int i = 0; i < g.dim() && rep.holds; ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      ++rep.cases;
      Rational v = 0;
      for (int k = 0; k < g.dim(); ++k) v += g.c[i][j][k] * ctx.divergence(k);
      if (!is_zero(v)) {
        rep.holds = false;
        rep.witness = CheckWitness{"(" + g.names[i] + ", " + g.names[j] + ")",
                                   rational_str(v), "0"};
        break;
      }
    }
  return rep;
}

CheckReport cocycle_check(const LieBialgebra& b) {
  CheckReport rep;
  rep.identity = "delta([a,b]) = a.delta(b) - b.delta(a)";
  const LieAlgebra& g = b.g;
  int n = g.dim();
  std::vector<std::vector<Multivector<Rational>>> ad(n);
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < n; ++m) ad[i].push_back(g.bracket(i, m));
  for (int i = 0; i < n && rep.holds; ++i)
    for (int j = i + 1; j < n; ++j) {
      ++rep.cases;
      Multivector<Rational> lhs(n);
      for (int k = 0; k < n; ++k) lhs += b.cobracket[k].scaled(g.c[i][j][k]);
      Multivector<Rational> rhs = extend_derivation(ad[i], 0, b.cobracket[j]) -
                                  extend_derivation(ad[j], 0, b.cobracket[i]);
      if (!(lhs == rhs)) {
        rep.holds = false;
        rep.witness = CheckWitness{"(" + g.names[i] + ", " + g.names[j] + ")",
                                   multivector_str(lhs, g.names),
                                   multivector_str(rhs, g.names)};
        break;
      }
    }
  return rep;
}

CheckReport co_jacobi_check(const LieBialgebra& b) {
  CheckReport rep = jacobi_check(dual_algebra(b));
  rep.identity = "co-Jacobi (Jacobi for the dual bracket)";
  return rep;
}

CheckReport bv_square_check(const FiniteLieContext& ctx) {
  CheckReport rep;
  rep.identity = "delta_bv o delta_bv = 0";
  int n = ctx.dim();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    ++rep.cases;
    Multivector<Rational> m = Multivector<Rational>::monomial(n, mask, 1);
    Multivector<Rational> v = bv_delta(ctx, bv_delta(ctx, m));
    if (!v.is_zero()) {
      rep.holds = false;
      rep.witness = CheckWitness{monomial_label(mask, ctx.g->names),
                                 multivector_str(v, ctx.g->names), "0"};
      break;
    }
  }
  return rep;
}

CheckReport cobracket_differential_square_check(const LieBialgebra& b) {
  CheckReport rep;
  rep.identity = "d_cobracket o d_cobracket = 0";
  int n = b.g.dim();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    ++rep.cases;
    Multivector<Rational> m = Multivector<Rational>::monomial(n, mask, 1);
    Multivector<Rational> v = cobracket_differential(b, cobracket_differential(b, m));
    if (!v.is_zero()) {
      rep.holds = false;
      rep.witness = CheckWitness{monomial_label(mask, b.g.names),
                                 multivector_str(v, b.g.names), "0"};
      break;
    }
  }
  return rep;
}

CheckReport anticommutator_matches_biderivation_check(const LieBialgebra& b) {
  CheckReport rep;
  rep.identity = "delta_bv d + d delta_bv = -(extension of bracket o cobracket)";
  int n = b.g.dim();
  FiniteLieContext ctx{&b.g, {}};
  std::vector<Multivector<Rational>> dvals = biderivation(b);
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    ++rep.cases;
    Multivector<Rational> m = Multivector<Rational>::monomial(n, mask, 1);
    Multivector<Rational> lhs = bv_delta(ctx, cobracket_differential(b, m)) +
                                cobracket_differential(b, bv_delta(ctx, m));
    Multivector<Rational> rhs = -extend_derivation(dvals, 0, m);
    if (!(lhs == rhs)) {
      rep.holds = false;
      rep.witness = CheckWitness{monomial_label(mask, b.g.names),
                                 multivector_str(lhs, b.g.names),
                                 multivector_str(rhs, b.g.names)};
      break;
    }
  }
  return rep;
}

CheckReport coboundary_biderivation_check(const LieBialgebra& b) {
  CheckReport rep;
  rep.identity = "bracket o cobracket = [potential, -]";
  if (!b.r) return rep;
  FiniteLieContext ctx{&b.g, {}};
  Multivector<Rational> h = *coboundary_potential(b);
  std::vector<Multivector<Rational>> dvals = biderivation(b);
  for (int i = 0; i < b.g.dim(); ++i) {
    ++rep.cases;
    Multivector<Rational> rhs = schouten(ctx, h, generator(b.g, i));
    if (!(dvals[i] == rhs)) {
      rep.holds = false;
      rep.witness = CheckWitness{b.g.names[i], multivector_str(dvals[i], b.g.names),
                                 multivector_str(rhs, b.g.names)};
      break;
    }
  }
  return rep;
}

std::vector<Rational> coordinates_in_degree(const Multivector<Rational>& a, int k) {
  std::vector<uint64_t> masks = basis_masks(a.dim(), k);
  std::map<uint64_t, int, MonoLess> pos;
  for (size_t i = 0; i < masks.size(); ++i) pos[masks[i]] = static_cast<int>(i);
  std::vector<Rational> out(masks.size(), Rational(0));
  for (const auto& [mask, coeff] : a.terms()) {
    auto it = pos.find(mask);
    if (it == pos.end()) throw std::invalid_argument("element does not live in the given degree");
    out[it->second] = coeff;
  }
  return out;
}

ChainComplex build_cobracket_complex(const LieBialgebra& b) {
  int n = b.g.dim();
  ChainComplex c;
  c.dims.resize(n + 1);
  c.labels.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<uint64_t> masks = basis_masks(n, k);
    c.dims[k] = static_cast<int>(masks.size());
    for (uint64_t m : masks) c.labels[k].push_back(monomial_label(m, b.g.names));
  }
  for (int k = 0; k < n; ++k) {
    std::vector<uint64_t> masks = basis_masks(n, k);
    QMatrix d(c.dims[k + 1], c.dims[k]);
    for (size_t col = 0; col < masks.size(); ++col) {
      Multivector<Rational> image =
          cobracket_differential(b, Multivector<Rational>::monomial(n, masks[col], 1));
      std::vector<Rational> coords = coordinates_in_degree(image, k + 1);
      for (int row = 0; row < c.dims[k + 1]; ++row) d.at(row, static_cast<int>(col)) = coords[row];
    }
    c.d.push_back(std::move(d));
  }
  return c;
}

LinearOperator biderivation_operator(const LieBialgebra& b) {
  int n = b.g.dim();
  std::vector<Multivector<Rational>> dvals = biderivation(b);
  LinearOperator op;
  for (int k = 0; k <= n; ++k) {
    std::vector<uint64_t> masks = basis_masks(n, k);
    QMatrix block(static_cast<int>(masks.size()), static_cast<int>(masks.size()));
    for (size_t col = 0; col < masks.size(); ++col) {
      Multivector<Rational> image =
          extend_derivation(dvals, 0, Multivector<Rational>::monomial(n, masks[col], 1));
      std::vector<Rational> coords = coordinates_in_degree(image, k);
      for (size_t row = 0; row < masks.size(); ++row)
        block.at(static_cast<int>(row), static_cast<int>(col)) = coords[row];
    }
    op.blocks.push_back(std::move(block));
  }
  return op;
}

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

Rational coeff_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("coefficients must be integers or rational strings");
}

Multivector<Rational> pairs_from_json(const json& arr, int dim, const char* what) {
  if (!arr.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  Multivector<Rational> out(dim);
  for (const auto& t : arr) {
    if (!t.is_object() || !t.contains("i") || !t.contains("j") || !t.contains("coeff"))
      throw std::invalid_argument(std::string(what) + " entries need i, j and coeff");
    int i = t.at("i").get<int>();
    int j = t.at("j").get<int>();
    if (i < 0 || j < 0 || i >= dim || j >= dim || i == j)
      throw std::invalid_argument(std::string(what) + " has an index pair out of range");
    Rational c = coeff_from_json(t.at("coeff"));
    if (i < j)
      out.add_term((uint64_t{1} << i) | (uint64_t{1} << j), c);
    else
      out.add_term((uint64_t{1} << i) | (uint64_t{1} << j), -c);
  }
  return out;
}

}  // namespace

LieBialgebra bialgebra_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("top level must be an object");
  if (!j.contains("dim") || !j.at("dim").is_number_integer())
    throw std::invalid_argument("missing integer field 'dim'");
  int dim = j.at("dim").get<int>();
  if (dim < 1 || dim > 16) throw std::invalid_argument("dim must be between 1 and 16");
  std::vector<std::string> names;
  if (j.contains("basis")) {
    if (!j.at("basis").is_array() || static_cast<int>(j.at("basis").size()) != dim)
      throw std::invalid_argument("'basis' must list one name per generator");
    for (const auto& s : j.at("basis")) names.push_back(s.get<std::string>());
  } else {
    for (int i = 1; i <= dim; ++i) names.push_back("e" + std::to_string(i));
  }

  LieBialgebra b;
  b.name = "file";
  b.g = LieAlgebra::with_basis(names);
  if (j.contains("brackets")) {
    if (!j.at("brackets").is_array()) throw std::invalid_argument("'brackets' must be an array");
    for (const auto& entry : j.at("brackets")) {
      if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
          !entry.contains("value"))
        throw std::invalid_argument("bracket entries need i, j and value");
      int i = entry.at("i").get<int>();
      int jj = entry.at("j").get<int>();
      if (i < 0 || jj < 0 || i >= dim || jj >= dim || i == jj)
        throw std::invalid_argument("bracket indices out of range");
      std::vector<Rational> value(dim, Rational(0));
      if (!entry.at("value").is_array())
        throw std::invalid_argument("bracket value must be an array of terms");
      for (const auto& t : entry.at("value")) {
        if (!t.is_object() || !t.contains("k") || !t.contains("coeff"))
          throw std::invalid_argument("bracket value terms need k and coeff");
        int k = t.at("k").get<int>();
        if (k < 0 || k >= dim) throw std::invalid_argument("bracket value index out of range");
        value[k] += coeff_from_json(t.at("coeff"));
      }
      b.g.set_bracket(i, jj, value);
    }
  }

  if (!j.contains("cobracket") || !j.at("cobracket").is_object())
    throw std::invalid_argument("missing object field 'cobracket'");
  const json& cob = j.at("cobracket");
  bool has_gen = cob.contains("by_generator");
  bool has_r = cob.contains("r_matrix");
  if (has_gen == has_r)
    throw std::invalid_argument("cobracket needs exactly one of 'by_generator' or 'r_matrix'");
  if (has_r) {
    b.r = pairs_from_json(cob.at("r_matrix"), dim, "r_matrix");
    b.cobracket = cobracket_from_r(b.g, *b.r);
  } else {
    const json& arr = cob.at("by_generator");
    if (!arr.is_array() || static_cast<int>(arr.size()) != dim)
      throw std::invalid_argument("'by_generator' must list one entry per generator");
    for (const auto& entry : arr) b.cobracket.push_back(pairs_from_json(entry, dim, "by_generator"));
  }
  return b;
}

std::string bialgebra_to_json_text(const LieBialgebra& b) {
  ordered_json j;
  j["dim"] = b.g.dim();
  j["basis"] = b.g.names;
  ordered_json brackets = ordered_json::array();
  for (int i = 0; i < b.g.dim(); ++i)
    for (int k = i + 1; k < b.g.dim(); ++k) {
      ordered_json value = ordered_json::array();
      for (int m = 0; m < b.g.dim(); ++m)
        if (!is_zero(b.g.c[i][k][m]))
          value.push_back({{"k", m}, {"coeff", rational_str(b.g.c[i][k][m])}});
      if (!value.empty()) brackets.push_back({{"i", i}, {"j", k}, {"value", value}});
    }
  j["brackets"] = brackets;
  // the reader wants exactly one cobracket form, so pick the r-matrix when we
  // have one (the generator table is recomputed from it on load)
  ordered_json cob;
  if (b.r) {
    ordered_json rm = ordered_json::array();
    for (const auto& [mask, coeff] : b.r->terms()) {
      std::vector<int> idx = mask_indices(mask);
      rm.push_back({{"i", idx[0]}, {"j", idx[1]}, {"coeff", rational_str(coeff)}});
    }
    cob["r_matrix"] = rm;
  } else {
    ordered_json by_gen = ordered_json::array();
    for (const auto& d : b.cobracket) {
      ordered_json terms = ordered_json::array();
      for (const auto& [mask, coeff] : d.terms()) {
        std::vector<int> idx = mask_indices(mask);
        terms.push_back({{"i", idx[0]}, {"j", idx[1]}, {"coeff", rational_str(coeff)}});
      }
      by_gen.push_back(terms);
    }
    cob["by_generator"] = by_gen;
  }
  j["cobracket"] = cob;
  return j.dump(2);
}

}  // namespace gbv
