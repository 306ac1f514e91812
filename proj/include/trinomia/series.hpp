#ifndef TRINOMIA_SERIES_HPP
#define TRINOMIA_SERIES_HPP

#include <vector>

#include "trinomia/rational.hpp"

namespace trinomia {

enum class Var { t, z };

const char* var_name(Var v);

// Formal power series with exact rational coefficients, known through an
// explicit truncation order K. Terms beyond K are unknown, not zero, so
// every binary operation returns the minimum sound order of its inputs.
class TruncatedSeries {
 public:
  TruncatedSeries(Var v, std::vector<Rational> coeffs);

  static TruncatedSeries zero(Var v, long order);
  static TruncatedSeries constant(Var v, const Rational& c, long order);
  static TruncatedSeries monomial(Var v, long exponent, const Rational& c, long order);

  Var var() const { return var_; }
  long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& operator[](long k) const { return coeffs_[static_cast<size_t>(k)]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  // Lowers the truncation order (drops coefficients above new_order).
  TruncatedSeries truncated(long new_order) const;

  // Replaces the coefficient at one exponent; used by sabotage harnesses.
  TruncatedSeries with_coefficient(long k, const Rational& c) const;

 private:
  Var var_;
  std::vector<Rational> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);

// Cauchy product, truncated at min(order(a), order(b)).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// a^e by binary exponentiation; e = 0 gives the constant 1 at order(a).
TruncatedSeries series_pow(const TruncatedSeries& a, unsigned long e);

// Multiplicative inverse; requires a nonzero constant term.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);

// d/dvar; output order = order(a) - 1.
TruncatedSeries series_differentiate(const TruncatedSeries& a);

// Antiderivative with zero constant term; output order = order(a) + 1.
TruncatedSeries series_integrate(const TruncatedSeries& a);

// Substitutes z = t^m into a series in z and multiplies by t^prefactor_exponent.
// Output order = m*order(a) + prefactor_exponent.
TruncatedSeries series_substitute_monomial(const TruncatedSeries& a, long m,
                                           long prefactor_exponent);

// Euler operator z d/dz: multiplies the coefficient of z^k by k.
TruncatedSeries apply_theta(const TruncatedSeries& a);

// Exact equality of every shared coefficient through min(order(a), order(b)).
bool agree_through_shared_order(const TruncatedSeries& a, const TruncatedSeries& b);

// First exponent <= through where a and b differ, or -1 if none.
long first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b, long through);

} // namespace trinomia

#endif
