#ifndef RADX_RATIONAL_HPP
#define RADX_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace radx {

/// Exact rational scalar. mpq_class keeps values canonical: gcd(|num|,den)=1,
/// den >= 1, zero stored as 0/1.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace radx

#endif  // RADX_RATIONAL_HPP
