#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbv/rational.hpp"

namespace gbv {

// Sparse polynomial with exact rational coefficients in a fixed number of
// variables. Keys are exponent vectors of length nvars; zero coefficients are
// never stored. The map comparator is descending lexicographic so iteration
// order is also display order (x-major terms first).
class Poly {
 public:
  using TermMap = std::map<std::vector<int>, Rational, std::greater<std::vector<int>>>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
  }

  static Poly constant(int nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
  }
  static Poly variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
    Poly p(nvars);
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
  }
  static Poly monomial(int nvars, const std::vector<int>& exps, const Rational& c) {
    Poly p(nvars);
    p.add_term(exps, c);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const std::vector<int>& exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != nvars_)
      throw std::invalid_argument("exponent vector length mismatch");
    for (int e : exps)
      if (e < 0) throw std::invalid_argument("negative exponent");
    if (::gbv::is_zero(c)) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      terms_.emplace(exps, c);
    } else {
      it->second += c;
      if (::gbv::is_zero(it->second)) terms_.erase(it);
    }
  }

  // -1 for the zero polynomial
  int total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (int k : e) d += k;
      if (d > deg) deg = d;
    }
    return deg;
  }

  bool is_constant() const { return total_degree() <= 0; }

  Rational constant_value() const {
    if (is_zero()) return 0;
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return terms_.begin()->second;
  }

  Poly operator-() const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  Poly& operator+=(const Poly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) {
    a += b;
    return a;
  }
  friend Poly operator-(Poly a, const Poly& b) {
    a -= b;
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_vars(b);
    Poly out(a.nvars_);
    std::vector<int> e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  Poly scaled(const Rational& c) const {
    Poly out(nvars_);
    if (::gbv::is_zero(c)) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
  }

  Poly derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("variable index out of range");
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      std::vector<int> d = e;
      d[var] -= 1;
      out.add_term(d, c * e[var]);
    }
    return out;
  }

  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  void check_same_vars(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  }

  int nvars_;
  TermMap terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

}  // namespace gbv
