#include "trinomia/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>

namespace trinomia {

Real to_real(const Rational& q) {
  return Real(numerator(q)) / Real(denominator(q));
}

Real pi_value() {
  return boost::math::constants::pi<Real>();
}

Complex operator+(const Complex& a, const Complex& b) {
  return {a.re + b.re, a.im + b.im};
}

Complex operator-(const Complex& a, const Complex& b) {
  return {a.re - b.re, a.im - b.im};
}

Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Complex operator*(const Real& c, const Complex& a) {
  return {c * a.re, c * a.im};
}

bool operator==(const Complex& a, const Complex& b) {
  return a.re == b.re && a.im == b.im;
}

Real abs(const Complex& a) { return hypot(a.re, a.im); }

Real arg(const Complex& a) { return atan2(a.im, a.re); }

Complex conj(const Complex& a) { return {a.re, -a.im}; }

Complex cpow(const Complex& z, const Real& p) {
  if (z.re == 0 && z.im == 0) return Complex(Real(0));
  Real r = abs(z);
  Real th = arg(z);
  Real m = pow(r, p);
  Real a = p * th;
  return {m * cos(a), m * sin(a)};
}

Complex unit_phase(const Real& theta) { return {cos(theta), sin(theta)}; }

std::string to_string(const Complex& z, unsigned digits) {
  std::ostringstream os;
  if (digits > 0) os.precision(digits);
  else os.precision(static_cast<int>(Real::default_precision()));
  os << z.re;
  if (z.im != 0) {
    os << (z.im < 0 ? "-" : "+") << abs(z.im) << "i";
  }
  return os.str();
}

} // namespace trinomia
