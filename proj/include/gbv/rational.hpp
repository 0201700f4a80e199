#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gbv {

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

// "p", "-p" or "p/q", arbitrary precision. Always canonicalized.
inline Rational parse_rational(const std::string& text) {
  mpq_t raw;
  mpq_init(raw);
  if (mpq_set_str(raw, text.c_str(), 10) != 0) {
    mpq_clear(raw);
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(raw)) == 0) {
    mpq_clear(raw);
    throw std::invalid_argument("zero denominator in rational: '" + text + "'");
  }
  mpq_canonicalize(raw);
  Rational out(raw);
  mpq_clear(raw);
  return out;
}

inline std::string rational_str(const Rational& x) { return x.get_str(); }

}  // namespace gbv
