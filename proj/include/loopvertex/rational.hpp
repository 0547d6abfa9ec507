#pragma once

#include <gmpxx.h>

#include <string>

namespace loopvertex {

using Rational = mpq_class;

// canonical p/q; mpq_class(p, q) alone does not reduce
inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// always "p/q", also for integers
std::string rational_to_string(const Rational& r);
// accepts "p/q" or "p"
Rational parse_rational(const std::string& s);

}  // namespace loopvertex
