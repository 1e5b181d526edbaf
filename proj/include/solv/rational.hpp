#pragma once

#include <gmpxx.h>

#include <string>

#include "solv/error.hpp"

namespace solv {

using Int = mpz_class;
using Rat = mpq_class;

/// mpq_class construction does not canonicalize; these helpers do.
inline Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const Int& z) { return z.get_str(); }

/// Serializes as "p" or "p/q"; the CLI wire format for rationals.
inline std::string to_string(const Rat& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw InvalidInput("bad rational: " + s);
  if (r.get_den() == 0) throw InvalidInput("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline int sgn(const Rat& r) { return ::sgn(r); }
inline int sgn(const Int& z) { return ::sgn(z); }

}  // namespace solv
