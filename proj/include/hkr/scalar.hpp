#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hkr {

/* exact rationals, always canonical (gmp keeps lowest terms, den > 0) */
using Scalar = mpq_class;

Scalar factorial(int n);
/* C(n,k), zero outside 0 <= k <= n */
Scalar binomial(int n, int k);
/* integral over [0,1] of t^m (1-t)^s = m! s! / (m+s+1)! */
Scalar beta_integral(int m, int s);

/* "p/q", denominator always written */
std::string format_scalar(const Scalar& x);

struct ScalarParseError : std::runtime_error {
  size_t offset;
  ScalarParseError(const std::string& what, size_t off)
      : std::runtime_error(what), offset(off) {}
};

/* accepts "p" or "p/q" with optional sign on p; q must be positive and nonzero */
Scalar parse_scalar(const std::string& text);

}  // namespace hkr
