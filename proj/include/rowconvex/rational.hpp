#ifndef ROWCONVEX_RATIONAL_HPP
#define ROWCONVEX_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace rowconvex {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(int n)
{
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

} // namespace rowconvex

#endif // ROWCONVEX_RATIONAL_HPP
