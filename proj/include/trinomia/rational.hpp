#ifndef TRINOMIA_RATIONAL_HPP
#define TRINOMIA_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

namespace trinomia {

// Exact coefficient arithmetic. GMP keeps rationals canonical:
// positive denominator, gcd(|num|, den) = 1 after every operation.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

Int factorial(unsigned long k);

// m!/(k!(m-k)!); zero when k > m.
Int binomial(const Int& m, const Int& k);

// C(nk+j, k) = (nk+j)! / (((n-1)k+j)! k!), the coefficient family of the
// generating functions H_{n,j}.
Int shifted_binomial(int n, long j, long k);

// Rising factorial a(a+1)...(a+k-1); 1 for k = 0.
Rational pochhammer(const Rational& a, unsigned long k);

} // namespace trinomia

#endif
