#ifndef TRINOMIA_HYPER_HPP
#define TRINOMIA_HYPER_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trinomia/numeric.hpp"
#include "trinomia/rational.hpp"
#include "trinomia/series.hpp"

namespace trinomia {

// pFq(alpha_1..alpha_m; beta_1..beta_q; gamma*z) with exact rational
// parameters. Betas must not be zero or negative integers.
struct HyperSpec {
  std::vector<Rational> alphas;
  std::vector<Rational> betas;
  Rational gamma = 1;

  std::string str() const;
};

// gamma_n = n^n/(n-1)^(n-1), the argument scale of the whole family.
Rational gamma_n(int n);

// Spec of H_{n,j}: alpha_i = (j+i)/n, beta_i = (j+i)/(n-1), gamma = gamma_n,
// parameter-cancelled. Its coefficient stream is C(nk+j, k).
HyperSpec h_spec(int n, long j);

// Spec of x_{n,j}/t^j: alpha_i = (j+i-1)/n, beta_i = (j+i)/(n-1),
// gamma = gamma_n, cancelled. Returns (prefactor exponent j, spec).
std::pair<long, HyperSpec> x_spec(int n, long j);

// Removes exactly-equal alpha/beta pairs; the function is unchanged.
HyperSpec cancel_parameters(HyperSpec s);

// c_0..c_K by the ratio recurrence
// c_{k+1}/c_k = gamma * prod(k+alpha_i) / (prod(k+beta_j) * (k+1)).
std::vector<Rational> coefficients(const HyperSpec& s, long K);

// Same stream by the direct Pochhammer-quotient formula; the independent
// cross-check route for the recurrence.
std::vector<Rational> coefficients_pochhammer(const HyperSpec& s, long K);

// Coefficient stream as a series in z.
TruncatedSeries coefficient_series(const HyperSpec& s, long K);

// d/dz pFq(..; gamma z) = multiplier * pFq(all parameters + 1; gamma z).
std::pair<Rational, HyperSpec> derivative_spec(const HyperSpec& s);

// Antiderivative shift (all parameters - 1); undefined when some alpha = 1.
std::pair<Rational, HyperSpec> integral_spec(const HyperSpec& s);

// Residual of the hypergeometric ODE for u(w) = pFq(..; w), w = gamma*z:
// D*prod(D+beta_j-1) u - w*prod(D+alpha_i) u, truncated at K. Zero for a
// genuine pFq stream.
TruncatedSeries ode_residual(const HyperSpec& s, long K);

// Same operator applied to a caller-supplied stream in w (sabotage route).
TruncatedSeries ode_residual(const HyperSpec& s, const TruncatedSeries& u);

struct EvalResult {
  Complex value;
  Real tail_bound;
  long terms_used = 0;
};

struct OutsideDiscError : std::domain_error {
  explicit OutsideDiscError(const std::string& m) : std::domain_error(m) {}
};

struct BudgetExceededError : std::runtime_error {
  BudgetExceededError(const std::string& m, Real best)
      : std::runtime_error(m), best_bound(std::move(best)) {}
  Real best_bound;
};

inline constexpr long kDefaultMaxTerms = 100000;

// Overridden by the TRINOMIA_MAX_TERMS environment variable when set.
long max_terms_budget();

// Sums pFq(..; gamma*z) for |gamma*z| < 1 with a certified geometric tail
// bound; needs tail_bound <= eps before returning.
EvalResult evaluate(const HyperSpec& s, const Complex& z, const Real& eps,
                    long max_terms = 0);

} // namespace trinomia

#endif
