#include "trinomia/hyper.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace trinomia {

namespace {

void validate(const HyperSpec& s) {
  for (const auto& b : s.betas)
    if (b <= 0 && denominator(b) == 1)
      throw std::invalid_argument(
          "HyperSpec: lower parameter is zero or a negative integer");
}

} // namespace

std::string HyperSpec::str() const {
  std::ostringstream os;
  os << alphas.size() << "F" << betas.size() << "(";
  for (size_t i = 0; i < alphas.size(); ++i)
    os << (i ? "," : "") << alphas[i];
  os << "; ";
  for (size_t i = 0; i < betas.size(); ++i)
    os << (i ? "," : "") << betas[i];
  os << "; ";
  if (gamma != 1) os << gamma << " ";
  os << "z)";
  return os.str();
}

Rational gamma_n(int n) {
  if (n < 2) throw std::invalid_argument("gamma_n: n must be >= 2");
  Int num = pow(Int(n), static_cast<unsigned>(n));
  Int den = pow(Int(n - 1), static_cast<unsigned>(n - 1));
  return Rational(num, den);
}

HyperSpec h_spec(int n, long j) {
  if (n < 2) throw std::invalid_argument("h_spec: n must be >= 2");
  if (j < 0) throw std::invalid_argument("h_spec: j must be >= 0");
  HyperSpec s;
  for (int i = 1; i <= n; ++i) s.alphas.emplace_back(j + i, n);
  for (int i = 1; i <= n - 1; ++i) s.betas.emplace_back(j + i, n - 1);
  s.gamma = gamma_n(n);
  return cancel_parameters(std::move(s));
}

std::pair<long, HyperSpec> x_spec(int n, long j) {
  if (n < 2) throw std::invalid_argument("x_spec: n must be >= 2");
  if (j < 1) throw std::invalid_argument("x_spec: j must be >= 1");
  HyperSpec s;
  for (int i = 1; i <= n; ++i) s.alphas.emplace_back(j + i - 1, n);
  for (int i = 1; i <= n - 1; ++i) s.betas.emplace_back(j + i, n - 1);
  s.gamma = gamma_n(n);
  return {j, cancel_parameters(std::move(s))};
}

HyperSpec cancel_parameters(HyperSpec s) {
  for (size_t i = 0; i < s.alphas.size();) {
    auto it = std::find(s.betas.begin(), s.betas.end(), s.alphas[i]);
    if (it != s.betas.end()) {
      s.betas.erase(it);
      s.alphas.erase(s.alphas.begin() + i);
    } else {
      ++i;
    }
  }
  return s;
}

std::vector<Rational> coefficients(const HyperSpec& s, long K) {
  validate(s);
  std::vector<Rational> c(static_cast<size_t>(K) + 1);
  c[0] = 1;
  for (long k = 0; k < K; ++k) {
    Rational num = s.gamma;
    for (const auto& a : s.alphas) num *= a + k;
    Rational den = k + 1;
    for (const auto& b : s.betas) den *= b + k;
    c[k + 1] = c[k] * num / den;
  }
  return c;
}

std::vector<Rational> coefficients_pochhammer(const HyperSpec& s, long K) {
  validate(s);
  std::vector<Rational> c(static_cast<size_t>(K) + 1);
  Rational gpow = 1;
  for (long k = 0; k <= K; ++k, gpow *= s.gamma) {
    Rational v = gpow;
    for (const auto& a : s.alphas) v *= pochhammer(a, k);
    for (const auto& b : s.betas) v /= pochhammer(b, k);
    c[k] = v / Rational(factorial(static_cast<unsigned long>(k)));
  }
  return c;
}

TruncatedSeries coefficient_series(const HyperSpec& s, long K) {
  return TruncatedSeries(Var::z, coefficients(s, K));
}

std::pair<Rational, HyperSpec> derivative_spec(const HyperSpec& s) {
  Rational mult = s.gamma;
  for (const auto& a : s.alphas) mult *= a;
  for (const auto& b : s.betas) mult /= b;
  HyperSpec shifted = s;
  for (auto& a : shifted.alphas) a += 1;
  for (auto& b : shifted.betas) b += 1;
  return {mult, shifted};
}

std::pair<Rational, HyperSpec> integral_spec(const HyperSpec& s) {
  for (const auto& a : s.alphas)
    if (a == 1)
      throw std::domain_error("integral_spec: shift not defined (some alpha = 1)");
  Rational mult = Rational(1) / s.gamma;
  for (const auto& b : s.betas) mult *= b - 1;
  for (const auto& a : s.alphas) mult /= a - 1;
  HyperSpec shifted = s;
  for (auto& a : shifted.alphas) a -= 1;
  for (auto& b : shifted.betas) b -= 1;
  return {mult, shifted};
}

TruncatedSeries ode_residual(const HyperSpec& s, long K) {
  // Stream of u(w) = pFq(..; w) in the scaled variable w = gamma*z.
  HyperSpec unscaled = s;
  unscaled.gamma = 1;
  return ode_residual(s, TruncatedSeries(Var::z, coefficients(unscaled, K)));
}

TruncatedSeries ode_residual(const HyperSpec& s, const TruncatedSeries& us) {
  long K = us.order();
  const std::vector<Rational>& u = us.coeffs();
  std::vector<Rational> r(static_cast<size_t>(K) + 1);
  for (long k = 0; k <= K; ++k) {
    Rational lhs = u[k] * k;
    for (const auto& b : s.betas) lhs *= b + k - 1;
    Rational rhs = 0;
    if (k >= 1) {
      rhs = u[k - 1];
      for (const auto& a : s.alphas) rhs *= a + k - 1;
    }
    r[k] = lhs - rhs;
  }
  return TruncatedSeries(Var::z, std::move(r));
}

long max_terms_budget() {
  if (const char* env = std::getenv("TRINOMIA_MAX_TERMS")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return kDefaultMaxTerms;
}

namespace {

// |gamma*z| * prod|k+alpha_i| / (prod|k+beta_j| * (k+1)) at integer k.
Real ratio_magnitude(const Real& agz, const std::vector<Real>& as,
                     const std::vector<Real>& bs, long k) {
  Real r = agz;
  for (const auto& a : as) r *= fabs(a + k);
  for (const auto& b : bs) r /= fabs(b + k);
  r /= k + 1;
  return r;
}

} // namespace

EvalResult evaluate(const HyperSpec& s, const Complex& z, const Real& eps,
                    long max_terms) {
  validate(s);
  if (eps <= 0) throw std::invalid_argument("evaluate: eps must be positive");
  if (max_terms <= 0) max_terms = max_terms_budget();

  // Working precision: target digits + 10 guard digits + room for the
  // term count.
  double target = -static_cast<double>(log10(eps));
  unsigned digits = static_cast<unsigned>(std::max(1.0, target)) + 10 +
                    static_cast<unsigned>(std::ceil(std::log10(
                        static_cast<double>(max_terms) + 10)));
  ScopedPrecision prec(digits);

  Complex gz = Complex(s.gamma) * z;
  Real agz = abs(gz);
  if (agz >= 1) {
    std::ostringstream os;
    os << "evaluate: |gamma*z| = " << agz << " >= 1, outside the disc of convergence";
    throw OutsideDiscError(os.str());
  }

  std::vector<Real> as, bs;
  for (const auto& a : s.alphas) as.push_back(to_real(a));
  for (const auto& b : s.betas) bs.push_back(to_real(b));

  // Beyond this index every factor k+alpha, k+beta is positive and the
  // term-ratio magnitude is eventually monotone with limit |gamma*z|.
  long k_positive = 0;
  for (const auto& a : s.alphas)
    k_positive = std::max(k_positive, 1 + static_cast<long>(ceil(-to_real(a))));
  for (const auto& b : s.betas)
    k_positive = std::max(k_positive, 1 + static_cast<long>(ceil(-to_real(b))));

  Complex term(Real(1));
  Complex sum(Real(1));
  bool bounded = false;
  Real r_sup = 0;
  Real best_tail = -1;

  for (long k = 0; k < max_terms; ++k) {
    Real num = 1;
    for (const auto& a : as) num *= a + k;
    Real den = Real(k + 1);
    for (const auto& b : bs) den *= b + k;
    term = (num / den) * (term * gz);
    sum = sum + term;

    if (!bounded && k >= k_positive) {
      Real r0 = ratio_magnitude(agz, as, bs, k);
      if (r0 < 1) {
        // Look ahead 8 indices: past k_positive the ratio sequence is
        // monotone once its discrete differences settle on one sign.
        Real rmax = r0;
        Real prev = r0;
        int sign = 0;
        bool settled = true;
        for (int i = 1; i <= 8; ++i) {
          Real ri = ratio_magnitude(agz, as, bs, k + i);
          if (ri > rmax) rmax = ri;
          int d = ri > prev ? 1 : (ri < prev ? -1 : 0);
          if (i > 4 && d != 0 && sign != 0 && d != sign) settled = false;
          if (d != 0) sign = d;
          prev = ri;
        }
        // Increasing tails are capped by the limit |gamma*z|.
        Real cap = sign > 0 ? (rmax > agz ? rmax : agz) : rmax;
        if (settled && cap < 1) {
          bounded = true;
          r_sup = cap;
        }
      }
    }
    if (bounded) {
      Real rk = ratio_magnitude(agz, as, bs, k + 1);
      if (rk > r_sup && rk < 1) r_sup = rk;
      Real tail = abs(term) * r_sup / (1 - r_sup);
      if (best_tail < 0 || tail < best_tail) best_tail = tail;
      if (tail <= eps) return {sum, tail, k + 2};
    }
  }
  std::ostringstream os;
  os << "evaluate: term budget " << max_terms << " exceeded before tail bound "
     << eps << " was reached";
  throw BudgetExceededError(os.str(), best_tail < 0 ? Real(1) : best_tail);
}

} // namespace trinomia
