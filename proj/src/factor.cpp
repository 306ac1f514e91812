#include "trinomia/factor.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace trinomia {

std::string Factorization::str() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors) {
    if (!first) os << "*";
    first = false;
    os << p;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

namespace {

constexpr unsigned long kTrialLimit = 1000000;
constexpr unsigned kMillerRabinRounds = 64;

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  return boost::multiprecision::miller_rabin_test(n, kMillerRabinRounds);
}

// Pollard rho, Brent variant.
Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

} // namespace

Factorization factorize(const Int& v) {
  if (v < 1) throw std::invalid_argument("factorize: value must be positive");
  std::map<Int, unsigned> fs;
  Int rest = v;
  for (unsigned long p = 2; p <= kTrialLimit && Int(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      ++fs[Int(p)];
      rest /= p;
    }
  }
  if (rest > 1) {
    if (rest < Int(kTrialLimit) * kTrialLimit || is_prime(rest))
      ++fs[rest];
    else
      factor_into(rest, fs);
  }
  Factorization f;
  f.value = v;
  f.factors.assign(fs.begin(), fs.end());
  return f;
}

std::string factored_string(const Int& v) {
  if (v < 0) return "-" + factorize(-v).str();
  return factorize(v).str();
}

} // namespace trinomia
