#ifndef MULTIDER_RATIONAL_HPP
#define MULTIDER_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace multider {

// Exact scalars. Every coefficient in the project is an mpq; no floating
// point is used anywhere in the algebra.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace multider

#endif
