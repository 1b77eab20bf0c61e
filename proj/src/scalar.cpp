#include "hkr/scalar.hpp"

#include <cctype>

namespace hkr {

Scalar factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Scalar(r);
}

Scalar binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Scalar(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Scalar(r);
}

Scalar beta_integral(int m, int s) {
  Scalar r = factorial(m) * factorial(s) / factorial(m + s + 1);
  r.canonicalize();
  return r;
}

std::string format_scalar(const Scalar& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

static bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Scalar parse_scalar(const std::string& text) {
  size_t slash = text.find('/');
  size_t num_end = slash == std::string::npos ? text.size() : slash;
  size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (!all_digits(text, start, num_end))
    throw ScalarParseError("malformed numerator in '" + text + "'", 0);
  mpz_class num(text.substr(start, num_end - start));
  if (text[0] == '-') num = -num;
  if (slash == std::string::npos) return Scalar(num);
  if (!all_digits(text, slash + 1, text.size()))
    throw ScalarParseError("malformed denominator in '" + text + "'", slash + 1);
  mpz_class den(text.substr(slash + 1));
  if (den == 0) throw ScalarParseError("zero denominator in '" + text + "'", slash + 1);
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace hkr
