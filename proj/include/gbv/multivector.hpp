#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "gbv/rational.hpp"

namespace gbv {

// Basis monomials of the exterior algebra are bitmasks over generator
// indices. Ordering: by degree first, then lexicographic on the sorted index
// tuple (so {0,3} comes before {1,2}, which plain numeric mask order gets
// wrong).
struct MonoLess {
  bool operator()(uint64_t a, uint64_t b) const {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    while (a && b) {
      int ia = std::countr_zero(a), ib = std::countr_zero(b);
      if (ia != ib) return ia < ib;
      a &= a - 1;
      b &= b - 1;
    }
    return false;
  }
};

// Sign of e_S ^ e_T relative to the increasing-index monomial e_{S|T};
// 0 when the supports overlap. Counts the inversions needed to merge T into S.
inline int wedge_sign(uint64_t s, uint64_t t) {
  if (s & t) return 0;
  int swaps = 0;
  while (t) {
    int j = std::countr_zero(t);
    swaps += std::popcount(s >> (j + 1));
    t &= t - 1;
  }
  return (swaps & 1) ? -1 : 1;
}

inline std::vector<int> mask_indices(uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// All degree-k basis masks in increasing MonoLess order.
inline std::vector<uint64_t> basis_masks(int dim, int k) {
  if (k < 0 || k > dim) return {};
  std::vector<uint64_t> out;
  std::vector<int> idx(k);
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == k) {
      uint64_t m = 0;
      for (int i : idx) m |= uint64_t{1} << i;
      out.push_back(m);
      return;
    }
    for (int i = start; i <= dim - (k - pos); ++i) {
      idx[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

namespace detail {
// indirection so the member function below does not shadow the coefficient
// overloads during lookup
template <class R>
bool coeff_vanishes(const R& c) {
  return is_zero(c);
}
}  // namespace detail

// Element of the exterior algebra over a rank-dim free module, with
// coefficients in R. R must support +, unary -, *, == and an is_zero
// overload reachable from this header (the Rational one is included above,
// coefficient classes living in this namespace are found by ADL).
template <class R>
class Multivector {
 public:
  using TermMap = std::map<uint64_t, R, MonoLess>;

  Multivector() : dim_(0) {}
  explicit Multivector(int dim) : dim_(dim) {
    if (dim < 0 || dim > 63) throw std::invalid_argument("rank out of range");
  }

  static Multivector monomial(int dim, uint64_t mask, const R& c) {
    Multivector out(dim);
    out.add_term(mask, c);
    return out;
  }

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(uint64_t mask, const R& c) {
    if (dim_ < 64 && (mask >> dim_) != 0)
      throw std::invalid_argument("monomial index out of range");
    if (detail::coeff_vanishes(c)) return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
      terms_.emplace(mask, c);
    } else {
      it->second = it->second + c;
      if (detail::coeff_vanishes(it->second)) terms_.erase(it);
    }
  }

  R coefficient(uint64_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? R{} : it->second;
  }

  Multivector operator-() const {
    Multivector out(dim_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }
  Multivector& operator+=(const Multivector& o) {
    check_same_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_same_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Multivector operator+(Multivector a, const Multivector& b) {
    a += b;
    return a;
  }
  friend Multivector operator-(Multivector a, const Multivector& b) {
    a -= b;
    return a;
  }

  Multivector scaled(const R& c) const {
    Multivector out(dim_);
    for (const auto& [m, k] : terms_) out.add_term(m, k * c);
    return out;
  }

  Multivector degree_part(int k) const {
    Multivector out(dim_);
    for (const auto& [m, c] : terms_)
      if (std::popcount(m) == k) out.terms_.emplace(m, c);
    return out;
  }

  bool is_homogeneous() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) {
      int d = std::popcount(m);
      if (deg == -1) deg = d;
      else if (d != deg) return false;
    }
    return true;
  }

  // -1 for zero, throws on mixed degree
  int homogeneous_degree() const {
    if (terms_.empty()) return -1;
    if (!is_homogeneous()) throw std::domain_error("multivector has mixed degree");
    return std::popcount(terms_.begin()->first);
  }

  int top_degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max(deg, std::popcount(m));
    return deg;
  }

  bool operator==(const Multivector& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
  bool operator!=(const Multivector& o) const { return !(*this == o); }

 private:
  void check_same_dim(const Multivector& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("rank mismatch");
  }

  int dim_;
  TermMap terms_;
};

template <class R>
Multivector<R> wedge(const Multivector<R>& a, const Multivector<R>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("rank mismatch");
  Multivector<R> out(a.dim());
  for (const auto& [s, cs] : a.terms())
    for (const auto& [t, ct] : b.terms()) {
      int sg = wedge_sign(s, t);
      if (sg == 0) continue;
      R c = cs * ct;
      out.add_term(s | t, sg < 0 ? -c : c);
    }
  return out;
}

}  // namespace gbv
