#include "trinomia/rational.hpp"

#include <stdexcept>

namespace trinomia {

Int factorial(unsigned long k) {
  Int r = 1;
  for (unsigned long i = 2; i <= k; ++i) r *= i;
  return r;
}

Int binomial(const Int& m, const Int& k) {
  if (k < 0 || m < 0) throw std::invalid_argument("binomial: negative argument");
  if (k > m) return 0;
  Int kk = k;
  if (m - k < kk) kk = m - k;
  Int num = 1, den = 1;
  for (Int i = 0; i < kk; ++i) {
    num *= m - i;
    den *= i + 1;
  }
  return num / den;  // exact: den divides num
}

Int shifted_binomial(int n, long j, long k) {
  if (n < 2) throw std::invalid_argument("shifted_binomial: n must be >= 2");
  if (j < 0 || k < 0) throw std::invalid_argument("shifted_binomial: j,k must be >= 0");
  return binomial(Int(n) * k + j, Int(k));
}

Rational pochhammer(const Rational& a, unsigned long k) {
  Rational r = 1;
  Rational f = a;
  for (unsigned long i = 0; i < k; ++i) {
    r *= f;
    f += 1;
  }
  return r;
}

} // namespace trinomia
