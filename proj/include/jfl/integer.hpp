#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jfl {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

// Accepts an optional sign followed by decimal digits.
Integer parse_integer(std::string_view text);

// Nonnegative residue of v modulo m (m > 0).
inline Integer mod_floor(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool divides(const Integer& d, const Integer& v) {
  return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace jfl
