#include "gbv/runner.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gbv/complex.hpp"
#include "gbv/gerstenhaber.hpp"
#include "gbv/lie.hpp"
#include "gbv/poisson.hpp"
#include "gbv/textio.hpp"

namespace gbv {
namespace {

using ordered_json = nlohmann::ordered_json;

struct Sampler {
  std::mt19937_64 rng;

  explicit Sampler(uint64_t seed) : rng(seed) {}

  // modulo instead of uniform_int_distribution so the stream does not depend
  // on the standard library build
  uint64_t pick(uint64_t n) { return rng() % n; }

  int degree(int dim) { return static_cast<int>(pick(static_cast<uint64_t>(dim) + 1)); }

  Rational coefficient() {
    Rational c(static_cast<long>(1 + pick(3)), static_cast<long>(1 + pick(2)));
    c.canonicalize();
    return pick(2) ? c : Rational(-c);
  }

  Multivector<Rational> homogeneous(int dim, int deg) {
    const std::vector<uint64_t> masks = basis_masks(dim, deg);
    Multivector<Rational> out(dim);
    int terms = 1 + static_cast<int>(pick(2));
    for (int t = 0; t < terms; ++t) out.add_term(masks[pick(masks.size())], coefficient());
    if (out.is_zero()) out.add_term(masks[0], Rational(1));
    return out;
  }

  Multivector<Rational> element(int dim) {
    Multivector<Rational> out = homogeneous(dim, degree(dim));
    out += homogeneous(dim, degree(dim));
    if (out.is_zero()) out.add_term(0, Rational(1));
    return out;
  }
};

void fail_with(CheckReport& rep, std::string inputs, std::string lhs, std::string rhs) {
  if (!rep.holds) return;
  rep.holds = false;
  rep.witness = CheckWitness{std::move(inputs), std::move(lhs), std::move(rhs)};
}

void append_sampled_checks(std::vector<CheckReport>& out, const LieBialgebra& b, uint64_t seed) {
  FiniteLieContext ctx;
  ctx.g = &b.g;
  Sampler s(seed);
  const int n = b.g.dim();
  const auto& names = b.g.names;

  {
    CheckReport rep;
    rep.identity = "shifted antisymmetry (sampled)";
    for (int k = 0; k < 200 && rep.holds; ++k) {
      auto a = s.homogeneous(n, s.degree(n));
      auto c = s.homogeneous(n, s.degree(n));
      ++rep.cases;
      auto res = shifted_antisymmetry_residual(ctx, a, c);
      if (!res.is_zero())
        fail_with(rep, "a = " + multivector_str(a, names) + ", b = " + multivector_str(c, names),
                  multivector_str(res, names), "0");
    }
    out.push_back(rep);
  }
  {
    CheckReport rep;
    rep.identity = "right Leibniz rule (sampled)";
    for (int k = 0; k < 150 && rep.holds; ++k) {
      auto a = s.homogeneous(n, s.degree(n));
      auto c = s.homogeneous(n, s.degree(n));
      auto e = s.homogeneous(n, s.degree(n));
      ++rep.cases;
      auto res = right_leibniz_residual(ctx, a, c, e);
      if (!res.is_zero())
        fail_with(rep,
                  "a = " + multivector_str(a, names) + ", b = " + multivector_str(c, names) +
                      ", c = " + multivector_str(e, names),
                  multivector_str(res, names), "0");
    }
    out.push_back(rep);
  }
  {
    CheckReport rep;
    rep.identity = "graded Jacobi (sampled)";
    for (int k = 0; k < 150 && rep.holds; ++k) {
      auto a = s.homogeneous(n, s.degree(n));
      auto c = s.homogeneous(n, s.degree(n));
      auto e = s.homogeneous(n, s.degree(n));
      ++rep.cases;
      auto res = graded_jacobi_residual(ctx, a, c, e);
      if (!res.is_zero())
        fail_with(rep,
                  "a = " + multivector_str(a, names) + ", b = " + multivector_str(c, names) +
                      ", c = " + multivector_str(e, names),
                  multivector_str(res, names), "0");
    }
    out.push_back(rep);
  }
  {
    CheckReport rep;
    rep.identity = "seven-term identity for the BV operator (sampled)";
    for (int k = 0; k < 150 && rep.holds; ++k) {
      auto a = s.homogeneous(n, s.degree(n));
      auto c = s.homogeneous(n, s.degree(n));
      auto e = s.homogeneous(n, s.degree(n));
      ++rep.cases;
      auto res = seven_term_residual(ctx, a, c, e);
      if (!res.is_zero())
        fail_with(rep,
                  "a = " + multivector_str(a, names) + ", b = " + multivector_str(c, names) +
                      ", c = " + multivector_str(e, names),
                  multivector_str(res, names), "0");
    }
    out.push_back(rep);
  }
  {
    CheckReport rep;
    rep.identity = "bracket from the BV operator agrees with Schouten (sampled)";
    for (int k = 0; k < 200 && rep.holds; ++k) {
      auto a = s.element(n);
      auto c = s.element(n);
      ++rep.cases;
      auto lhs = bracket_from_delta(ctx, a, c);
      auto rhs = schouten(ctx, a, c);
      if (!(lhs == rhs))
        fail_with(rep, "a = " + multivector_str(a, names) + ", b = " + multivector_str(c, names),
                  multivector_str(lhs, names), multivector_str(rhs, names));
    }
    out.push_back(rep);
  }
}

bool all_hold(const std::vector<CheckReport>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.holds; });
}

void render_checks_table(std::ostream& os, const std::vector<CheckReport>& checks) {
  for (const auto& c : checks) {
    std::string head = std::string("  ") + (c.holds ? "[ok]   " : "[FAIL] ") + c.identity;
    head += head.size() < 64 ? std::string(64 - head.size(), ' ') : "  ";
    os << head << c.cases << (c.cases == 1 ? " case" : " cases") << '\n';
    if (c.witness) {
      os << "         inputs: " << c.witness->inputs << '\n';
      os << "         lhs:    " << c.witness->lhs << '\n';
      os << "         rhs:    " << c.witness->rhs << '\n';
    }
  }
}

ordered_json checks_json(const std::vector<CheckReport>& checks) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json j;
    j["identity"] = c.identity;
    j["holds"] = c.holds;
    j["cases"] = c.cases;
    if (c.witness) {
      ordered_json w;
      w["inputs"] = c.witness->inputs;
      w["lhs"] = c.witness->lhs;
      w["rhs"] = c.witness->rhs;
      j["witness"] = w;
    }
    arr.push_back(j);
  }
  return arr;
}

ordered_json input_json(const RunConfig& cfg) {
  ordered_json j;
  if (cfg.preset) j["preset"] = *cfg.preset;
  if (cfg.file) j["file"] = *cfg.file;
  if (cfg.lambda) j["lambda"] = rational_str(*cfg.lambda);
  return j;
}

LieBialgebra load_bialgebra(const RunConfig& cfg) {
  if (cfg.preset.has_value() == cfg.file.has_value())
    throw std::invalid_argument("provide exactly one of --preset or --file");
  if (cfg.preset) return make_preset(*cfg.preset, cfg.lambda);
  if (cfg.lambda) throw std::invalid_argument("--lambda only applies to the aff2_case3 preset");
  std::ifstream in(*cfg.file);
  if (!in) throw std::invalid_argument("cannot read file: " + *cfg.file);
  std::stringstream ss;
  ss << in.rdbuf();
  LieBialgebra b = bialgebra_from_json_text(ss.str());
  if (b.name.empty()) b.name = *cfg.file;
  return b;
}

std::string joined_representatives(const std::vector<std::string>& reps) {
  std::string out;
  for (size_t i = 0; i < reps.size(); ++i) {
    if (i) out += " | ";
    out += reps[i];
  }
  return out;
}

void render_cohomology_table(std::ostream& os, const ChainComplex& c, const CohomologyReport& rep) {
  os << "  dims:";
  for (int d : c.dims) os << ' ' << d;
  os << '\n';
  for (const auto& d : rep.degrees) {
    os << "  H^" << d.degree << ": betti " << d.betti;
    if (!d.representative_text.empty())
      os << ", representatives: " << joined_representatives(d.representative_text);
    os << '\n';
  }
}

ordered_json cohomology_json(const ChainComplex& c, const CohomologyReport& rep) {
  ordered_json j;
  j["dims"] = c.dims;
  ordered_json arr = ordered_json::array();
  for (const auto& d : rep.degrees) {
    ordered_json e;
    e["degree"] = d.degree;
    e["dim"] = d.dim;
    e["betti"] = d.betti;
    e["representatives"] = d.representative_text;
    arr.push_back(e);
  }
  j["by_degree"] = arr;
  return j;
}

ordered_json certificate_json(const DecompositionCertificate& cert) {
  ordered_json j;
  j["chain_map"] = cert.chain_map;
  ordered_json spectrum = ordered_json::array();
  for (size_t i = 0; i < cert.generator_eigenvalues.size(); ++i) {
    ordered_json e;
    e["eigenvalue"] = rational_str(cert.generator_eigenvalues[i]);
    e["multiplicity"] = cert.generator_multiplicities[i];
    spectrum.push_back(e);
  }
  j["degree_one_spectrum"] = spectrum;
  j["degree_one_diagonalizable"] = cert.degree_one_diagonalizable;
  j["dimension_sums_match"] = cert.dimension_sums_match;
  j["betti_sums_match"] = cert.betti_sums_match;
  ordered_json blocks = ordered_json::array();
  for (const auto& blk : cert.blocks) {
    ordered_json e;
    e["eigenvalue"] = rational_str(blk.eigenvalue);
    e["dims"] = blk.dims;
    e["betti"] = blk.betti;
    e["acyclic"] = blk.acyclic;
    blocks.push_back(e);
  }
  j["blocks"] = blocks;
  return j;
}

void render_certificate_table(std::ostream& os, const DecompositionCertificate& cert) {
  os << "  chain map: " << (cert.chain_map ? "yes" : "no")
     << "; degree-one block diagonalizable: " << (cert.degree_one_diagonalizable ? "yes" : "no")
     << '\n';
  os << "  degree-one spectrum: ";
  for (size_t i = 0; i < cert.generator_eigenvalues.size(); ++i) {
    if (i) os << ", ";
    os << rational_str(cert.generator_eigenvalues[i]) << " (x"
       << cert.generator_multiplicities[i] << ')';
  }
  os << '\n';
  for (const auto& blk : cert.blocks) {
    os << "  eigenvalue " << rational_str(blk.eigenvalue) << ": dims";
    for (int d : blk.dims) os << ' ' << d;
    os << ", betti";
    for (int d : blk.betti) os << ' ' << d;
    os << (blk.acyclic ? ", acyclic" : ", not acyclic") << '\n';
  }
  os << "  dimension sums match: " << (cert.dimension_sums_match ? "yes" : "no")
     << "; betti sums match: " << (cert.betti_sums_match ? "yes" : "no") << '\n';
}

std::string display_name(const LieBialgebra& b, const RunConfig& cfg) {
  if (cfg.preset) return *cfg.preset;
  if (!b.name.empty()) return b.name;
  return cfg.file.value_or("input");
}

RunResult run_check(const RunConfig& cfg) {
  LieBialgebra b = load_bialgebra(cfg);
  FiniteLieContext ctx;
  ctx.g = &b.g;

  std::vector<CheckReport> checks;
  checks.push_back(jacobi_check(b.g));
  checks.push_back(cocycle_check(b));
  checks.push_back(co_jacobi_check(b));
  checks.push_back(bv_square_check(ctx));
  checks.push_back(cobracket_differential_square_check(b));
  checks.push_back(anticommutator_matches_biderivation_check(b));
  checks.push_back(coboundary_biderivation_check(b));
  append_sampled_checks(checks, b, cfg.seed);

  std::vector<Multivector<Rational>> der = biderivation(b);
  std::optional<Multivector<Rational>> pot = coboundary_potential(b);
  const auto& names = b.g.names;
  bool ok = all_hold(checks);

  RunResult res;
  res.exit_code = ok ? 0 : 1;
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = "check";
    j["input"] = input_json(cfg);
    j["seed"] = cfg.seed;
    j["checks"] = checks_json(checks);
    ordered_json cob = ordered_json::array();
    for (int i = 0; i < b.g.dim(); ++i) {
      ordered_json e;
      e["generator"] = names[i];
      e["value"] = multivector_str(b.cobracket[i], names);
      cob.push_back(e);
    }
    j["cobracket"] = cob;
    ordered_json bid;
    ordered_json byg = ordered_json::array();
    for (int i = 0; i < b.g.dim(); ++i) {
      ordered_json e;
      e["generator"] = names[i];
      e["value"] = multivector_str(der[i], names);
      byg.push_back(e);
    }
    bid["by_generator"] = byg;
    if (pot) bid["potential"] = multivector_str(*pot, names);
    j["biderivation"] = bid;
    j["all_hold"] = ok;
    res.output = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "check " << display_name(b, cfg) << " (seed " << cfg.seed << ")\n\n";
    render_checks_table(os, checks);
    os << "\ncobracket\n";
    for (int i = 0; i < b.g.dim(); ++i)
      os << "  delta(" << names[i] << ") = " << multivector_str(b.cobracket[i], names) << '\n';
    os << "\nbiderivation\n";
    for (int i = 0; i < b.g.dim(); ++i)
      os << "  D(" << names[i] << ") = " << multivector_str(der[i], names) << '\n';
    if (pot)
      os << "  potential: " << multivector_str(*pot, names) << "   (D = [potential, -])\n";
    os << "\nresult: " << (ok ? "all identities hold" : "failures above") << '\n';
    res.output = os.str();
  }
  return res;
}

RunResult run_cohomology(const RunConfig& cfg) {
  LieBialgebra b = load_bialgebra(cfg);
  const int n = b.g.dim();
  int lo = 0;
  int hi = n;
  if (cfg.degrees) {
    lo = cfg.degrees->first;
    hi = cfg.degrees->second;
  }
  if (lo < 0 || hi < lo || hi > n)
    throw std::invalid_argument("degree range must satisfy 0 <= lo <= hi <= dim");

  std::vector<CheckReport> checks;
  checks.push_back(jacobi_check(b.g));
  checks.push_back(cocycle_check(b));
  checks.push_back(co_jacobi_check(b));
  ChainComplex full = build_cobracket_complex(b);
  checks.push_back(full.d_squared_check());
  bool ok = all_hold(checks);

  RunResult res;
  if (!ok) {
    res.exit_code = 1;
    if (cfg.format == "json") {
      ordered_json j;
      j["command"] = "cohomology";
      j["input"] = input_json(cfg);
      j["checks"] = checks_json(checks);
      j["error"] = "structure checks failed";
      res.output = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "cohomology " << display_name(b, cfg) << "\n\n";
      render_checks_table(os, checks);
      os << "\nresult: structure checks failed, no cohomology computed\n";
      res.output = os.str();
    }
    return res;
  }

  CohomologyReport full_report = cohomology(full, lo, hi);

  std::optional<DecompositionResult> dec;
  std::optional<CohomologyReport> inv_report;
  bool matches_full = true;
  if (cfg.invariant) {
    dec = decompose_by_operator(full, biderivation_operator(b));
    inv_report = cohomology(dec->invariant, lo, hi);
    for (size_t k = 0; k < full_report.degrees.size(); ++k)
      if (full_report.degrees[k].betti != inv_report->degrees[k].betti) matches_full = false;
  }

  res.exit_code = 0;
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = "cohomology";
    j["input"] = input_json(cfg);
    j["degrees"] = {lo, hi};
    j["checks"] = checks_json(checks);
    j["full"] = cohomology_json(full, full_report);
    if (dec) {
      j["certificate"] = certificate_json(dec->certificate);
      ordered_json inv = cohomology_json(dec->invariant, *inv_report);
      inv["matches_full"] = matches_full;
      j["invariant"] = inv;
    }
    res.output = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "cohomology " << display_name(b, cfg) << ", degrees " << lo << ".." << hi << "\n\n";
    render_checks_table(os, checks);
    os << "\nfull complex\n";
    render_cohomology_table(os, full, full_report);
    if (dec) {
      os << "\nbiderivation decomposition certificate\n";
      render_certificate_table(os, dec->certificate);
      os << "\ninvariant subcomplex (eigenvalue 0)\n";
      render_cohomology_table(os, dec->invariant, *inv_report);
      os << "  betti matches the full complex: " << (matches_full ? "yes" : "no") << '\n';
    }
    res.output = os.str();
  }
  return res;
}

int infer_vars(const std::string& text) {
  int n = 2;
  for (size_t i = 0; i < text.size();) {
    if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
    std::string name = text.substr(i, j - i);
    i = j;
    if (name.size() > 1 && name[0] == 'd') name = name.substr(1);
    if (name == "z") {
      n = std::max(n, 3);
    } else if (name.size() >= 2 && name[0] == 'x' &&
               std::all_of(name.begin() + 1, name.end(),
                           [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      if (name.size() > 3) throw std::invalid_argument("too many variables (supported up to 6)");
      n = std::max(n, std::max(4, std::stoi(name.substr(1))));
    }
  }
  return n;
}

RunResult run_poisson(const RunConfig& cfg) {
  if (!cfg.bivector) throw std::invalid_argument("poisson needs --bivector");
  if (cfg.preset || cfg.file)
    throw std::invalid_argument("--preset and --file do not apply to poisson");
  const int n = infer_vars(*cfg.bivector);
  if (n > 6) throw std::invalid_argument("too many variables (supported up to 6)");
  if (cfg.max_degree < 0 || cfg.max_degree > 12)
    throw std::invalid_argument("the coefficient window must be between 0 and 12");

  PolyContext ctx(n);
  Multivector<Poly> pi = parse_poly_multivector(*cfg.bivector, n);
  if (!pi.is_zero() && !(pi.is_homogeneous() && pi.homogeneous_degree() == 2))
    throw std::invalid_argument("the bivector must be homogeneous of exterior degree 2");

  const std::vector<std::string> vars = poly_var_names(n);
  const std::vector<std::string> frames = frame_names(n);

  int lo = 0;
  int hi = n;
  if (cfg.degrees) {
    lo = cfg.degrees->first;
    hi = cfg.degrees->second;
  }
  if (lo < 0 || hi < lo || hi > n)
    throw std::invalid_argument("degree range must satisfy 0 <= lo <= hi <= vars");

  std::vector<CheckReport> checks;
  {
    CheckReport jac;
    jac.identity = "[pi, pi] = 0";
    jac.cases = 1;
    Multivector<Poly> jcb = jacobiator(ctx, pi);
    if (!jcb.is_zero()) {
      jac.holds = false;
      jac.witness = CheckWitness{"pi = " + multivector_str(pi, frames, vars),
                                 multivector_str(jcb, frames, vars), "0"};
    }
    checks.push_back(jac);
  }

  RunResult res;
  if (!checks.front().holds) {
    res.exit_code = 1;
    if (cfg.format == "json") {
      ordered_json j;
      j["command"] = "poisson";
      j["input"] = input_json(cfg);
      j["input"]["bivector"] = *cfg.bivector;
      j["vars"] = n;
      j["checks"] = checks_json(checks);
      j["error"] = "the bivector is not Poisson";
      res.output = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "poisson in " << n << " variables: pi = " << multivector_str(pi, frames, vars)
         << "\n\n";
      render_checks_table(os, checks);
      os << "\nresult: the bivector is not Poisson\n";
      res.output = os.str();
    }
    return res;
  }

  Multivector<Poly> modular = modular_field(ctx, pi);
  ModularProbe probe = unimodularity_probe(ctx, pi, cfg.max_degree);

  int pideg = 0;
  for (const auto& [mask, f] : pi.terms()) pideg = std::max(pideg, f.total_degree());

  std::optional<ChainComplex> cx;
  std::optional<CohomologyReport> rep;
  std::string skip_note;
  if (pideg <= 2) {
    cx = truncated_poisson_complex(ctx, pi, cfg.max_degree);
    checks.push_back(cx->d_squared_check());
    if (checks.back().holds) rep = cohomology(*cx, lo, hi);
  } else {
    skip_note =
        "coefficient degree exceeds 2, so the truncated window is not closed under [pi, -]";
  }

  bool ok = all_hold(checks);
  res.exit_code = ok ? 0 : 1;
  if (cfg.format == "json") {
    ordered_json j;
    j["command"] = "poisson";
    j["input"] = input_json(cfg);
    j["input"]["bivector"] = *cfg.bivector;
    j["vars"] = n;
    j["window"] = cfg.max_degree;
    j["checks"] = checks_json(checks);
    j["pi"] = multivector_str(pi, frames, vars);
    j["modular_field"] = multivector_str(modular, frames, vars);
    ordered_json pj;
    pj["window"] = probe.window;
    pj["exact"] = probe.exact;
    if (probe.exact) pj["witness"] = poly_str(probe.witness, vars);
    j["probe"] = pj;
    if (rep) {
      j["cohomology"] = cohomology_json(*cx, *rep);
    } else if (!skip_note.empty()) {
      j["cohomology_skipped"] = skip_note;
    }
    res.output = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "poisson in " << n << " variables: pi = " << multivector_str(pi, frames, vars) << "\n\n";
    render_checks_table(os, checks);
    os << "\nmodular field\n  X = " << multivector_str(modular, frames, vars) << '\n';
    os << "\nunimodularity probe (window degree " << probe.window << ")\n";
    if (probe.exact)
      os << "  exact: f = " << poly_str(probe.witness, vars) << " has d(f) = X\n";
    else
      os << "  no f with d(f) = X and coefficient degree <= " << probe.window << '\n';
    if (rep) {
      os << "\ntruncated cohomology (coefficient window " << cfg.max_degree << ", degrees " << lo
         << ".." << hi << ")\n";
      render_cohomology_table(os, *cx, *rep);
    } else if (!skip_note.empty()) {
      os << "\ntruncated cohomology skipped: " << skip_note << '\n';
    }
    res.output = os.str();
  }
  return res;
}

}  // namespace

std::optional<std::pair<int, int>> parse_degree_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos || pos == 0 || pos + 2 >= text.size() + 1) return std::nullopt;
  try {
    size_t used = 0;
    int lo = std::stoi(text.substr(0, pos), &used);
    if (used != pos) return std::nullopt;
    const std::string rest = text.substr(pos + 2);
    if (rest.empty()) return std::nullopt;
    int hi = std::stoi(rest, &used);
    if (used != rest.size()) return std::nullopt;
    return std::make_pair(lo, hi);
  } catch (...) {
    return std::nullopt;
  }
}

RunResult run(const RunConfig& cfg) {
  if (cfg.format != "table" && cfg.format != "json")
    throw std::invalid_argument("format must be table or json");
  if (cfg.command == "check") return run_check(cfg);
  if (cfg.command == "cohomology") return run_cohomology(cfg);
  if (cfg.command == "poisson") return run_poisson(cfg);
  throw std::invalid_argument("unknown command: " + cfg.command);
}

}  // namespace gbv
