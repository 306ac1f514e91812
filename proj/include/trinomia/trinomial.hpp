#ifndef TRINOMIA_TRINOMIAL_HPP
#define TRINOMIA_TRINOMIAL_HPP

#include <string>
#include <vector>

#include "trinomia/hyper.hpp"
#include "trinomia/numeric.hpp"
#include "trinomia/series.hpp"

namespace trinomia {

// Solvers for F_n(x,t) = x^n - x + t = 0 and its companion
// G_n(y,t) = gamma_n t^(n-1) y^n - (y-1)(y + 1/(n-1))^(n-1).

struct ConvergenceRadius {
  int n;
  Rational z0;  // exact: r_n^(n-1) = (n-1)^(n-1)/n^n = 1/gamma_n
  Real r;       // high-precision real (n-1)-th root
};

ConvergenceRadius radius(int n);

// Series of x_{n,j}(t) = t^j * pFq(x_spec; gamma_n t^(n-1)) through t^K.
// For j=1 the coefficients of t^(1+k(n-1)) are the Fuss-Catalan numbers.
TruncatedSeries x_series(int n, long j, long K);

// Series of y_{n,j}(t) = t^j * H_{n,j}(t^(n-1)) through t^K; the
// coefficient of t^(j+k(n-1)) is C(nk+j, k).
TruncatedSeries y_series(int n, long j, long K);

enum class Method { series, large_t_iteration, oracle };
const char* method_name(Method m);

struct RootResult {
  Complex value;
  Real residual;     // |F_n(value, t)|, recomputed at full working precision
  Real error_bound;  // certified bound on |value - true root| when available
  Method method = Method::oracle;
  long terms_used = 0;
};

inline constexpr double kDefaultSeriesCutoff = 0.95;  // fraction of r_n
inline constexpr double kDefaultLargeTThreshold = 2.0;  // multiples of r_n

// Principal branch (x(0) = 0) by hypergeometric summation; valid for
// |t| <= rho*r_n.
RootResult solve_principal(int n, const Complex& t, const Real& eps,
                           double rho = kDefaultSeriesCutoff);

// y(t) = x'(t) via H_{n,0}; satisfies (1 - n x^(n-1)) y = 1 and G_n(y,t)=0.
RootResult y_value(int n, const Complex& t, const Real& eps,
                   double rho = kDefaultSeriesCutoff);

// All n roots of x^n - x + t by Durand-Kerner with Newton polishing.
std::vector<RootResult> solve_all_branches(int n, const Complex& t,
                                           const Real& eps,
                                           unsigned seed = 0x7473);

// Fixed-point iteration x = eps_n t^(1/n) (1 - x/t)^(1/n) for large |t|.
RootResult solve_large_t(int n, const Complex& t, const Real& eps);

struct NonContractionError : std::runtime_error {
  explicit NonContractionError(const std::string& m) : std::runtime_error(m) {}
};

Complex f_residual(int n, const Complex& x, const Complex& t);
Complex g_residual(int n, const Complex& y, const Complex& t);

} // namespace trinomia

#endif
