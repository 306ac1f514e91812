#include "trinomia/trinomial.hpp"

#include <random>
#include <sstream>

namespace trinomia {

namespace {

Complex cpow_int(const Complex& z, unsigned long e) {
  Complex r(Real(1));
  Complex b = z;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return r;
}

unsigned digits_for(const Real& eps) {
  double d = -static_cast<double>(log10(eps));
  return static_cast<unsigned>(std::max(1.0, d)) + 15;
}

} // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::large_t_iteration: return "large_t_iteration";
    case Method::oracle: return "oracle";
  }
  return "?";
}

ConvergenceRadius radius(int n) {
  if (n < 2) throw std::invalid_argument("radius: n must be >= 2");
  Rational z0 = Rational(1) / gamma_n(n);
  Real r = pow(to_real(z0), Real(1) / (n - 1));
  return {n, z0, r};
}

TruncatedSeries x_series(int n, long j, long K) {
  auto [pref, spec] = x_spec(n, j);
  if (K < pref) return TruncatedSeries::zero(Var::t, K);
  long kmax = (K - pref) / (n - 1);
  TruncatedSeries in_z = coefficient_series(spec, kmax);
  TruncatedSeries in_t = series_substitute_monomial(in_z, n - 1, pref);
  if (in_t.order() < K) {
    // next z-term lands beyond t^K, so padding with zeros is sound
    std::vector<Rational> cs = in_t.coeffs();
    cs.resize(static_cast<size_t>(K) + 1);
    return TruncatedSeries(Var::t, std::move(cs));
  }
  return in_t;
}

TruncatedSeries y_series(int n, long j, long K) {
  HyperSpec spec = h_spec(n, j);
  if (K < j) return TruncatedSeries::zero(Var::t, K);
  long kmax = (K - j) / (n - 1);
  TruncatedSeries in_z = coefficient_series(spec, kmax);
  TruncatedSeries in_t = series_substitute_monomial(in_z, n - 1, j);
  if (in_t.order() < K) {
    std::vector<Rational> cs = in_t.coeffs();
    cs.resize(static_cast<size_t>(K) + 1);
    return TruncatedSeries(Var::t, std::move(cs));
  }
  return in_t;
}

Complex f_residual(int n, const Complex& x, const Complex& t) {
  return cpow_int(x, static_cast<unsigned long>(n)) - x + t;
}

Complex g_residual(int n, const Complex& y, const Complex& t) {
  Complex tn = cpow_int(t, static_cast<unsigned long>(n - 1));
  Complex lhs = Complex(gamma_n(n)) * tn * cpow_int(y, static_cast<unsigned long>(n));
  Complex shift = y + Complex(Rational(1, n - 1));
  Complex rhs = (y - Complex(Real(1))) * cpow_int(shift, static_cast<unsigned long>(n - 1));
  return lhs - rhs;
}

namespace {

void require_in_disc(int n, const Complex& t, double rho, const Real& r) {
  if (abs(t) > Real(rho) * r) {
    std::ostringstream os;
    os << "t with |t| = " << abs(t) << " is outside the series region |t| <= "
       << rho << " * r_" << n << " (r_" << n << " = " << r << ")";
    throw OutsideDiscError(os.str());
  }
}

} // namespace

RootResult solve_principal(int n, const Complex& t, const Real& eps, double rho) {
  ScopedPrecision prec(digits_for(eps));
  ConvergenceRadius rad = radius(n);
  require_in_disc(n, t, rho, rad.r);
  if (abs(t) == 0)
    return {Complex(Real(0)), Real(0), Real(0), Method::series, 0};
  Complex z = cpow_int(t, static_cast<unsigned long>(n - 1));
  auto [pref, spec] = x_spec(n, 1);
  Real at = abs(t);
  Real scale = at < 1 ? Real(1) : at;
  EvalResult e = evaluate(spec, z, eps / scale);
  Complex x = t * e.value;
  return {x, abs(f_residual(n, x, t)), at * e.tail_bound, Method::series,
          e.terms_used};
}

RootResult y_value(int n, const Complex& t, const Real& eps, double rho) {
  ScopedPrecision prec(digits_for(eps));
  ConvergenceRadius rad = radius(n);
  require_in_disc(n, t, rho, rad.r);
  if (abs(t) == 0)
    return {Complex(Real(1)), Real(0), Real(0), Method::series, 0};
  Complex z = cpow_int(t, static_cast<unsigned long>(n - 1));
  EvalResult e = evaluate(h_spec(n, 0), z, eps);
  return {e.value, abs(g_residual(n, e.value, t)), e.tail_bound, Method::series,
          e.terms_used};
}

std::vector<RootResult> solve_all_branches(int n, const Complex& t,
                                           const Real& eps, unsigned seed) {
  ScopedPrecision prec(digits_for(eps));
  const unsigned long un = static_cast<unsigned long>(n);
  Real at = abs(t);
  Real scale_t = at < 1 ? Real(1) : at;
  Real R = at < 1 ? Real(1) : pow(at, Real(1) / n);

  auto p = [&](const Complex& x) { return f_residual(n, x, t); };
  auto dp = [&](const Complex& x) {
    return Real(n) * cpow_int(x, un - 1) - Complex(Real(1));
  };

  // Deterministic initial guesses on a perturbed circle of radius R.
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> jitter(0.0, 1e-3);
  std::vector<Complex> xs;
  Real two_pi = 2 * pi_value();
  for (int i = 0; i < n; ++i) {
    Real theta = two_pi * i / n + Real(0.41 + jitter(rng));
    xs.push_back(R * unit_phase(theta));
  }

  Real step_tol = Real("1e-15") * R;
  bool converged = false;
  for (int iter = 0; iter < 600 && !converged; ++iter) {
    Real max_step = 0;
    for (int i = 0; i < n; ++i) {
      Complex denom(Real(1));
      for (int j = 0; j < n; ++j)
        if (j != i) denom = denom * (xs[i] - xs[j]);
      Complex step = p(xs[i]) / denom;
      xs[i] = xs[i] - step;
      Real a = abs(step);
      if (a > max_step) max_step = a;
    }
    converged = max_step <= step_tol;
  }
  if (!converged)
    throw std::runtime_error("solve_all_branches: Durand-Kerner did not converge");

  // Newton polishing to full working precision.
  std::vector<RootResult> out;
  for (int i = 0; i < n; ++i) {
    Complex x = xs[i];
    Real last_step = 0;
    for (int it = 0; it < 80; ++it) {
      Complex d = dp(x);
      if (abs(d) == 0) break;
      Complex step = p(x) / d;
      x = x - step;
      last_step = abs(step);
      if (last_step <= eps * R / 1000) break;
    }
    Real res = abs(p(x));
    if (!(res <= eps * scale_t))
      throw std::runtime_error("solve_all_branches: root failed residual target");
    out.push_back({x, res, last_step, Method::oracle, 0});
  }
  return out;
}

RootResult solve_large_t(int n, const Complex& t, const Real& eps) {
  ScopedPrecision prec(digits_for(eps));
  ConvergenceRadius rad = radius(n);
  Real at = abs(t);
  if (at < Real(kDefaultLargeTThreshold) * rad.r)
    throw NonContractionError(
        "solve_large_t: |t| below the large-t threshold; use the series or the oracle");

  Real inv_n = Real(1) / n;
  Complex eps_n = unit_phase(pi_value() / n);
  Complex lead = eps_n * cpow(t, inv_n);
  Complex x = lead;
  Real prev_step = -1;
  int growth = 0;
  long iters = 0;
  for (; iters < 2000; ++iters) {
    Complex xn = lead * cpow(Complex(Real(1)) - x / t, inv_n);
    Real step = abs(xn - x);
    x = xn;
    if (step <= eps * abs(lead)) break;
    if (prev_step >= 0 && step > prev_step) {
      if (++growth >= 3)
        throw NonContractionError(
            "solve_large_t: iteration is not contracting; |t| too small");
    } else {
      growth = 0;
    }
    prev_step = step;
  }
  // Newton polish on F_n itself.
  for (int it = 0; it < 80; ++it) {
    Complex d = Real(n) * cpow_int(x, static_cast<unsigned long>(n - 1)) -
                Complex(Real(1));
    Complex step = f_residual(n, x, t) / d;
    x = x - step;
    if (abs(step) <= eps * abs(lead) / 1000) break;
  }
  Real res = abs(f_residual(n, x, t));
  if (!(res <= eps * at))
    throw std::runtime_error("solve_large_t: residual target not reached");
  return {x, res, eps * abs(lead), Method::large_t_iteration, iters};
}

} // namespace trinomia
