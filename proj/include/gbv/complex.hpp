#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gbv/gerstenhaber.hpp"
#include "gbv/linalg.hpp"

namespace gbv {

// Cochain complex indexed 0..n with d[k] : C^k -> C^{k+1} stored as a
// dims[k+1] x dims[k] matrix (columns are source basis vectors).
struct ChainComplex {
  std::vector<int> dims;
  std::vector<QMatrix> d;
  std::vector<std::vector<std::string>> labels;

  int top_degree() const { return static_cast<int>(dims.size()) - 1; }
  CheckReport d_squared_check() const;
};

struct DegreeCohomology {
  int degree = 0;
  int dim = 0;
  int rank_in = 0;
  int rank_out = 0;
  int betti = 0;
  std::vector<std::vector<Rational>> representatives;
  std::vector<std::string> representative_text;
};

struct CohomologyReport {
  std::vector<DegreeCohomology> degrees;
};

// Cohomology in degrees lo..hi, with canonical representatives: kernel
// vectors that extend the image to a basis, reduced against the image
// echelon so repeated runs print identical combinations.
CohomologyReport cohomology(const ChainComplex& c, int lo, int hi);

std::string combination_label(const std::vector<Rational>& coords,
                              const std::vector<std::string>& labels);

// Degree-preserving operator given blockwise.
struct LinearOperator {
  std::vector<QMatrix> blocks;
};

struct EigenvalueBlockReport {
  Rational eigenvalue;
  std::vector<int> dims;
  std::vector<int> betti;
  bool acyclic = false;
};

struct DecompositionCertificate {
  bool chain_map = false;
  std::vector<Rational> generator_eigenvalues;
  std::vector<int> generator_multiplicities;
  bool degree_one_diagonalizable = false;
  bool dimension_sums_match = false;
  bool betti_sums_match = false;
  std::vector<int> full_betti;
  std::vector<EigenvalueBlockReport> blocks;
};

// Raised when the degree-one block fails to be diagonalizable with rational
// eigenvalues, or when the blockwise eigenspaces do not exhaust a degree.
class DiagonalizabilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct DecompositionResult {
  ChainComplex invariant;  // the zero-eigenvalue subcomplex
  DecompositionCertificate certificate;
};

// Splits the complex into eigenvalue blocks of op. Eigenvalue candidates in
// degree k are the k-fold subset sums of the degree-one spectrum, which is
// exactly right when op extends a degree-one operator as a derivation; the
// certificate's dimension counts prove completeness for the given complex
// either way. Throws DiagonalizabilityError when certification fails and
// std::domain_error when op is not a chain map.
DecompositionResult decompose_by_operator(const ChainComplex& c, const LinearOperator& op);

}  // namespace gbv
