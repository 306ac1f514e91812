#ifndef TRINOMIA_NUMERIC_HPP
#define TRINOMIA_NUMERIC_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "trinomia/rational.hpp"

namespace trinomia {

// Variable-precision real; each value carries its own precision,
// new values are created at the current default.
using Real = boost::multiprecision::mpfr_float;

// Raises the default precision for a scope, never lowers it.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits10)
      : saved_(Real::default_precision()) {
    if (digits10 > saved_) Real::default_precision(digits10);
  }
  ~ScopedPrecision() { Real::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

Real to_real(const Rational& q);
Real pi_value();

// Minimal complex type over Real; std::complex does not admit
// multiprecision scalars.
struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}          // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(const Rational& q) : re(to_real(q)), im(0) {}

  bool is_real(const Real& tol) const { return abs(im) <= tol; }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Real& c, const Complex& a);
bool operator==(const Complex& a, const Complex& b);

Real abs(const Complex& a);
Real arg(const Complex& a);
Complex conj(const Complex& a);

// Principal value z^p for real p (branch cut on the negative real axis).
Complex cpow(const Complex& z, const Real& p);

// exp(i*theta).
Complex unit_phase(const Real& theta);

std::string to_string(const Complex& z, unsigned digits = 0);

} // namespace trinomia

#endif
