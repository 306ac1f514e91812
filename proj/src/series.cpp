#include "trinomia/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace trinomia {

const char* var_name(Var v) { return v == Var::t ? "t" : "z"; }

TruncatedSeries::TruncatedSeries(Var v, std::vector<Rational> coeffs)
    : var_(v), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("TruncatedSeries: empty coefficient list");
}

TruncatedSeries TruncatedSeries::zero(Var v, long order) {
  return TruncatedSeries(v, std::vector<Rational>(static_cast<size_t>(order) + 1));
}

TruncatedSeries TruncatedSeries::constant(Var v, const Rational& c, long order) {
  std::vector<Rational> cs(static_cast<size_t>(order) + 1);
  cs[0] = c;
  return TruncatedSeries(v, std::move(cs));
}

TruncatedSeries TruncatedSeries::monomial(Var v, long exponent, const Rational& c,
                                          long order) {
  if (exponent > order)
    throw std::invalid_argument("TruncatedSeries::monomial: exponent above order");
  std::vector<Rational> cs(static_cast<size_t>(order) + 1);
  cs[static_cast<size_t>(exponent)] = c;
  return TruncatedSeries(v, std::move(cs));
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

TruncatedSeries TruncatedSeries::truncated(long new_order) const {
  if (new_order >= order()) return *this;
  if (new_order < 0) throw std::invalid_argument("truncated: negative order");
  std::vector<Rational> cs(coeffs_.begin(), coeffs_.begin() + new_order + 1);
  return TruncatedSeries(var_, std::move(cs));
}

TruncatedSeries TruncatedSeries::with_coefficient(long k, const Rational& c) const {
  if (k < 0 || k > order())
    throw std::invalid_argument("with_coefficient: exponent out of range");
  std::vector<Rational> cs = coeffs_;
  cs[static_cast<size_t>(k)] = c;
  return TruncatedSeries(var_, std::move(cs));
}

namespace {
void require_same_var(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.var() != b.var())
    throw std::invalid_argument("series variable mismatch");
}
} // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_var(a, b);
  long K = std::min(a.order(), b.order());
  std::vector<Rational> cs(static_cast<size_t>(K) + 1);
  for (long k = 0; k <= K; ++k) cs[k] = a[k] + b[k];
  return TruncatedSeries(a.var(), std::move(cs));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_var(a, b);
  long K = std::min(a.order(), b.order());
  std::vector<Rational> cs(static_cast<size_t>(K) + 1);
  for (long k = 0; k <= K; ++k) cs[k] = a[k] - b[k];
  return TruncatedSeries(a.var(), std::move(cs));
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  std::vector<Rational> cs(a.coeffs());
  for (auto& c : cs) c = -c;
  return TruncatedSeries(a.var(), std::move(cs));
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
  std::vector<Rational> cs(a.coeffs());
  for (auto& x : cs) x *= c;
  return TruncatedSeries(a.var(), std::move(cs));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_var(a, b);
  long K = std::min(a.order(), b.order());
  std::vector<Rational> cs(static_cast<size_t>(K) + 1);
  for (long i = 0; i <= K; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; i + j <= K; ++j) {
      if (b[j] == 0) continue;
      cs[i + j] += a[i] * b[j];
    }
  }
  return TruncatedSeries(a.var(), std::move(cs));
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned long e) {
  TruncatedSeries result = TruncatedSeries::constant(a.var(), 1, a.order());
  TruncatedSeries base = a;
  while (e > 0) {
    if (e & 1) result = series_mul(result, base);
    e >>= 1;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
  if (a[0] == 0)
    throw std::domain_error("series_reciprocal: zero constant term");
  long K = a.order();
  std::vector<Rational> b(static_cast<size_t>(K) + 1);
  b[0] = Rational(1) / a[0];
  for (long k = 1; k <= K; ++k) {
    Rational s = 0;
    for (long i = 1; i <= k; ++i) s += a[i] * b[k - i];
    b[k] = -s / a[0];
  }
  return TruncatedSeries(a.var(), std::move(b));
}

TruncatedSeries series_differentiate(const TruncatedSeries& a) {
  long K = a.order();
  if (K == 0) return TruncatedSeries::zero(a.var(), 0);
  std::vector<Rational> cs(static_cast<size_t>(K));
  for (long k = 1; k <= K; ++k) cs[k - 1] = Rational(k) * a[k];
  return TruncatedSeries(a.var(), std::move(cs));
}

TruncatedSeries series_integrate(const TruncatedSeries& a) {
  long K = a.order();
  std::vector<Rational> cs(static_cast<size_t>(K) + 2);
  for (long k = 0; k <= K; ++k) cs[k + 1] = a[k] / Rational(k + 1);
  return TruncatedSeries(a.var(), std::move(cs));
}

TruncatedSeries series_substitute_monomial(const TruncatedSeries& a, long m,
                                           long prefactor_exponent) {
  if (m < 1) throw std::invalid_argument("series_substitute_monomial: m must be >= 1");
  if (prefactor_exponent < 0)
    throw std::invalid_argument("series_substitute_monomial: negative prefactor");
  long K = m * a.order() + prefactor_exponent;
  std::vector<Rational> cs(static_cast<size_t>(K) + 1);
  for (long k = 0; k <= a.order(); ++k)
    cs[static_cast<size_t>(m * k + prefactor_exponent)] = a[k];
  return TruncatedSeries(Var::t, std::move(cs));
}

TruncatedSeries apply_theta(const TruncatedSeries& a) {
  std::vector<Rational> cs(a.coeffs());
  for (long k = 0; k <= a.order(); ++k) cs[k] *= k;
  return TruncatedSeries(a.var(), std::move(cs));
}

bool agree_through_shared_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return first_mismatch(a, b, std::min(a.order(), b.order())) < 0;
}

long first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b, long through) {
  if (a.var() != b.var()) return 0;
  long K = std::min({a.order(), b.order(), through});
  for (long k = 0; k <= K; ++k)
    if (a[k] != b[k]) return k;
  return -1;
}

} // namespace trinomia
