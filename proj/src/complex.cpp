#include "gbv/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gbv {

CheckReport ChainComplex::d_squared_check() const {
  CheckReport rep;
  rep.identity = "d o d = 0";
  for (size_t k = 0; k + 1 < d.size(); ++k) {
    ++rep.cases;
    if (!(d[k + 1] * d[k]).is_zero()) {
      rep.holds = false;
      rep.witness = CheckWitness{"degree " + std::to_string(k), "d_{k+1} d_k", "0"};
      return rep;
    }
  }
  return rep;
}

std::string combination_label(const std::vector<Rational>& coords,
                              const std::vector<std::string>& labels) {
  std::string out;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (is_zero(coords[i])) continue;
    if (!out.empty()) out += " + ";
    if (i < labels.size() && labels[i] != "1")
      out += rational_str(coords[i]) + " * " + labels[i];
    else
      out += rational_str(coords[i]);
  }
  return out.empty() ? "0" : out;
}

namespace {

// reduce v against the row echelon form of the image space
void reduce_mod_rows(std::vector<Rational>& v, const Echelon& rows) {
  for (int r = 0; r < rows.rank; ++r) {
    int p = rows.pivot_cols[r];
    if (is_zero(v[p])) continue;
    Rational f = v[p];
    for (int j = 0; j < rows.rref.cols; ++j) v[j] -= f * rows.rref.at(r, j);
  }
}

}  // namespace

CohomologyReport cohomology(const ChainComplex& c, int lo, int hi) {
  if (lo < 0 || hi > c.top_degree() || lo > hi)
    throw std::invalid_argument("degree range out of bounds");
  CohomologyReport report;
  for (int k = lo; k <= hi; ++k) {
    DegreeCohomology deg;
    deg.degree = k;
    deg.dim = c.dims[k];
    QMatrix dk = k < static_cast<int>(c.d.size()) ? c.d[k] : QMatrix(0, c.dims[k]);
    QMatrix dprev = k > 0 ? c.d[k - 1] : QMatrix(c.dims[k], 0);
    deg.rank_out = rank(dk);
    deg.rank_in = rank(dprev);
    deg.betti = deg.dim - deg.rank_out - deg.rank_in;

    QMatrix kernel = kernel_basis(dk);
    QMatrix image = image_basis(dprev);
    QMatrix joint(deg.dim, image.cols + kernel.cols);
    for (int i = 0; i < deg.dim; ++i) {
      for (int j = 0; j < image.cols; ++j) joint.at(i, j) = image.at(i, j);
      for (int j = 0; j < kernel.cols; ++j) joint.at(i, image.cols + j) = kernel.at(i, j);
    }
    Echelon joint_ech = reduced_row_echelon(joint);
    Echelon image_rows = reduced_row_echelon(image.transpose());
    for (int p : joint_ech.pivot_cols) {
      if (p < image.cols) continue;
      std::vector<Rational> v(deg.dim);
      for (int i = 0; i < deg.dim; ++i) v[i] = kernel.at(i, p - image.cols);
      reduce_mod_rows(v, image_rows);
      deg.representatives.push_back(v);
      if (k < static_cast<int>(c.labels.size()) && !c.labels[k].empty())
        deg.representative_text.push_back(combination_label(v, c.labels[k]));
      else
        deg.representative_text.push_back(combination_label(v, {}));
    }
    if (static_cast<int>(deg.representatives.size()) != deg.betti)
      throw std::domain_error("representative count disagrees with the rank computation");
    report.degrees.push_back(std::move(deg));
  }
  return report;
}

namespace {

std::optional<QMatrix> solve_columns(const QMatrix& basis, const QMatrix& targets) {
  QMatrix aug(basis.rows, basis.cols + targets.cols);
  for (int i = 0; i < basis.rows; ++i) {
    for (int j = 0; j < basis.cols; ++j) aug.at(i, j) = basis.at(i, j);
    for (int j = 0; j < targets.cols; ++j) aug.at(i, basis.cols + j) = targets.at(i, j);
  }
  Echelon e = reduced_row_echelon(std::move(aug));
  for (int p : e.pivot_cols)
    if (p >= basis.cols) return std::nullopt;
  QMatrix x(basis.cols, targets.cols);
  for (int r = 0; r < e.rank; ++r)
    for (int j = 0; j < targets.cols; ++j) x.at(e.pivot_cols[r], j) = e.rref.at(r, basis.cols + j);
  return x;
}

std::vector<int> betti_vector(const ChainComplex& c) {
  std::vector<int> out(c.dims.size());
  for (size_t k = 0; k < c.dims.size(); ++k) {
    int rank_out = k < c.d.size() ? rank(c.d[k]) : 0;
    int rank_in = k > 0 ? rank(c.d[k - 1]) : 0;
    out[k] = c.dims[k] - rank_out - rank_in;
  }
  return out;
}

}  // namespace

DecompositionResult decompose_by_operator(const ChainComplex& c, const LinearOperator& op) {
  const int degrees = static_cast<int>(c.dims.size());
  if (static_cast<int>(op.blocks.size()) != degrees)
    throw std::invalid_argument("operator block count disagrees with the complex");
  for (int k = 0; k < degrees; ++k)
    if (op.blocks[k].rows != c.dims[k] || op.blocks[k].cols != c.dims[k])
      throw std::invalid_argument("operator block shape disagrees with the complex");

  DecompositionResult result;
  DecompositionCertificate& cert = result.certificate;

  cert.chain_map = true;
  for (int k = 0; k + 1 < degrees; ++k)
    if (!(op.blocks[k + 1] * c.d[k] == c.d[k] * op.blocks[k])) {
      cert.chain_map = false;
      throw std::domain_error("operator does not commute with the differential");
    }

  if (degrees < 2) throw std::invalid_argument("complex has no degree-one part");
  const QMatrix& d1 = op.blocks[1];
  std::vector<Rational> roots;
  try {
    roots = rational_roots(char_poly(d1));
  } catch (const std::domain_error& e) {
    throw DiagonalizabilityError(std::string("eigenvalue search failed: ") + e.what());
  }
  QMatrix prod = QMatrix::identity(d1.rows);
  for (const auto& l : roots) {
    QMatrix shifted = d1;
    for (int i = 0; i < d1.rows; ++i) shifted.at(i, i) -= l;
    prod = prod * shifted;
  }
  if (!prod.is_zero())
    throw DiagonalizabilityError(
        "degree-one operator block is not diagonalizable over the rationals");
  cert.degree_one_diagonalizable = true;
  cert.generator_eigenvalues = roots;

  // spectrum with multiplicities, then subset sums per degree
  std::vector<Rational> spectrum;
  for (const auto& l : roots) {
    QMatrix shifted = d1;
    for (int i = 0; i < d1.rows; ++i) shifted.at(i, i) -= l;
    int mult = d1.rows - rank(shifted);
    cert.generator_multiplicities.push_back(mult);
    for (int i = 0; i < mult; ++i) spectrum.push_back(l);
  }
  if (static_cast<int>(spectrum.size()) != d1.rows)
    throw DiagonalizabilityError("eigenspace dimensions do not fill the degree-one block");

  std::vector<std::set<Rational>> candidates(degrees);
  candidates[0].insert(Rational(0));
  const int n = static_cast<int>(spectrum.size());
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    int k = std::popcount(mask);
    if (k >= degrees) continue;
    Rational sum = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (uint64_t{1} << i)) sum += spectrum[i];
    candidates[k].insert(sum);
  }

  std::set<Rational> all_eigenvalues;
  for (const auto& s : candidates) all_eigenvalues.insert(s.begin(), s.end());

  // kernel bases per eigenvalue and degree
  std::map<Rational, std::vector<QMatrix>> eigenbasis;
  cert.dimension_sums_match = true;
  for (const auto& l : all_eigenvalues) {
    std::vector<QMatrix> per_degree;
    for (int k = 0; k < degrees; ++k) {
      if (!candidates[k].count(l)) {
        per_degree.push_back(QMatrix(c.dims[k], 0));
        continue;
      }
      QMatrix shifted = op.blocks[k];
      for (int i = 0; i < c.dims[k]; ++i) shifted.at(i, i) -= l;
      per_degree.push_back(kernel_basis(shifted));
    }
    eigenbasis.emplace(l, std::move(per_degree));
  }
  for (int k = 0; k < degrees; ++k) {
    int total = 0;
    for (const auto& [l, bases] : eigenbasis) total += bases[k].cols;
    if (total != c.dims[k]) {
      cert.dimension_sums_match = false;
      throw DiagonalizabilityError("eigenspaces do not exhaust degree " + std::to_string(k));
    }
  }

  cert.full_betti = betti_vector(c);
  std::vector<int> betti_sum(degrees, 0);
  for (const auto& [l, bases] : eigenbasis) {
    ChainComplex sub;
    sub.dims.resize(degrees);
    for (int k = 0; k < degrees; ++k) sub.dims[k] = bases[k].cols;
    for (int k = 0; k + 1 < degrees; ++k) {
      auto m = solve_columns(bases[k + 1], c.d[k] * bases[k]);
      if (!m)
        throw DiagonalizabilityError("differential does not preserve an eigenvalue block");
      sub.d.push_back(std::move(*m));
    }
    EigenvalueBlockReport block;
    block.eigenvalue = l;
    block.dims = sub.dims;
    block.betti = betti_vector(sub);
    block.acyclic = true;
    for (int b : block.betti) block.acyclic &= (b == 0);
    for (int k = 0; k < degrees; ++k) betti_sum[k] += block.betti[k];
    if (is_zero(l)) {
      // labels for the invariant part are the kernel combinations; a unit
      // coordinate keeps the plain basis label so representatives do not
      // pick up a nested coefficient prefix
      static const std::vector<std::string> no_labels;
      sub.labels.resize(degrees);
      for (int k = 0; k < degrees; ++k) {
        const QMatrix& b = bases[k];
        const std::vector<std::string>& base_labels =
            k < static_cast<int>(c.labels.size()) ? c.labels[k] : no_labels;
        for (int j = 0; j < b.cols; ++j) {
          std::vector<Rational> coords(b.rows);
          int nonzero = -1;
          int count = 0;
          for (int i = 0; i < b.rows; ++i) {
            coords[i] = b.at(i, j);
            if (!is_zero(coords[i])) {
              nonzero = i;
              ++count;
            }
          }
          std::string lab;
          if (count == 1 && nonzero < static_cast<int>(base_labels.size()) &&
              coords[nonzero] == 1) {
            lab = base_labels[nonzero];
          } else {
            lab = combination_label(coords, base_labels);
            if (lab.find(' ') != std::string::npos) lab = "(" + lab + ")";
          }
          sub.labels[k].push_back(lab);
        }
      }
      result.invariant = sub;
    }
    cert.blocks.push_back(std::move(block));
  }
  cert.betti_sums_match = (betti_sum == cert.full_betti);
  return result;
}

}  // namespace gbv
