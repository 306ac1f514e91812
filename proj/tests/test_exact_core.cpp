#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/miller_rabin.hpp>

#include <random>

#include "trinomia/factor.hpp"
#include "trinomia/hyper.hpp"
#include "trinomia/rational.hpp"
#include "trinomia/series.hpp"

using namespace trinomia;

TEST_CASE("binomial basics") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(17, 0) == 1);
  CHECK(binomial(3, 7) == 0);
  CHECK(binomial(10, 2) == 45);
  CHECK(binomial(40, 8) == 76904685);
}

TEST_CASE("binomial symmetry") {
  for (long m = 0; m <= 30; ++m)
    for (long k = 0; k <= m; ++k)
      CHECK(binomial(Int(m), Int(k)) == binomial(Int(m), Int(m - k)));
}

TEST_CASE("shifted binomial against appendix values") {
  CHECK(shifted_binomial(3, 0, 2) == 15);
  CHECK(shifted_binomial(2, 1, 1) == 3);
  CHECK(shifted_binomial(5, 0, 3) == 455);
  CHECK(shifted_binomial(6, 0, 8) == 377348994);
}

TEST_CASE("shifted binomial equals the factorial formula") {
  for (int n = 2; n <= 6; ++n)
    for (long j = 0; j <= 4; ++j)
      for (long k = 0; k <= 20; ++k) {
        Int direct = factorial(static_cast<unsigned long>(n * k + j)) /
                     (factorial(static_cast<unsigned long>((n - 1) * k + j)) *
                      factorial(static_cast<unsigned long>(k)));
        CHECK(shifted_binomial(n, j, k) == direct);
      }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(Rational(-7, 3), 0) == 1);
  for (unsigned long k = 0; k <= 8; ++k)
    CHECK(pochhammer(Rational(1), k) == Rational(factorial(k)));
}

TEST_CASE("series multiplication") {
  TruncatedSeries a(Var::t, {1, 1, 0});
  TruncatedSeries b(Var::t, {1, -1, 0});
  TruncatedSeries p = series_mul(a, b);
  CHECK(p[0] == 1);
  CHECK(p[1] == 0);
  CHECK(p[2] == -1);

  // x-series for n=2 squared satisfies x^2 = x - t through t^5
  TruncatedSeries x(Var::t, {0, 1, 1, 2, 5, 14});
  TruncatedSeries x2 = series_mul(x, x);
  CHECK(x2[2] == 1);
  CHECK(x2[3] == 2);
  CHECK(x2[4] == 5);
  // x^2 = x - t: above t^1 the squared series repeats x itself
  for (long k = 2; k <= 5; ++k) CHECK(x2[k] == x[k]);

  TruncatedSeries one = TruncatedSeries::constant(Var::t, 1, 5);
  CHECK(agree_through_shared_order(series_mul(x, one), x));

  CHECK_THROWS_AS(series_mul(a, TruncatedSeries(Var::z, {1})),
                  std::invalid_argument);
}

TEST_CASE("series reciprocal") {
  TruncatedSeries g(Var::t, {1, -1, 0, 0});
  TruncatedSeries inv = series_reciprocal(g);
  for (long k = 0; k <= 3; ++k) CHECK(inv[k] == 1);  // geometric series

  TruncatedSeries two = TruncatedSeries::constant(Var::t, 2, 0);
  CHECK(series_reciprocal(two)[0] == Rational(1, 2));

  CHECK_THROWS_AS(series_reciprocal(TruncatedSeries(Var::t, {0, 1})),
                  std::domain_error);
}

TEST_CASE("reciprocal of y_0 for n=3 matches the appendix") {
  // 1/y_0 = 1 - 3t^2 - 2*3 t^4 - 3*7 t^6
  TruncatedSeries y(Var::t, {1, 0, 3, 0, 15, 0, 84});
  TruncatedSeries inv = series_reciprocal(y);
  CHECK(inv[0] == 1);
  CHECK(inv[2] == -3);
  CHECK(inv[4] == -6);
  CHECK(inv[6] == -21);
  CHECK(inv[1] == 0);
  CHECK(inv[3] == 0);
}

TEST_CASE("differentiate and integrate") {
  TruncatedSeries x(Var::t, {0, 1, 0, 1});  // t + t^3, head of x for n=3
  TruncatedSeries d = series_differentiate(x);
  CHECK(d.order() == 2);
  CHECK(d[0] == 1);
  CHECK(d[1] == 0);
  CHECK(d[2] == 3);

  TruncatedSeries i = series_integrate(d);
  CHECK(i.order() == 3);
  CHECK(agree_through_shared_order(i, x));

  CHECK(series_differentiate(TruncatedSeries::constant(Var::t, 7, 4)).is_zero());
  TruncatedSeries tk = TruncatedSeries::monomial(Var::t, 5, 1, 6);
  CHECK(series_differentiate(tk)[4] == 5);
  CHECK(series_integrate(tk)[6] == Rational(1, 6));
}

TEST_CASE("differentiate after integrate is the identity (random series)") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Rational> cs;
    for (int k = 0; k <= 12; ++k) cs.emplace_back(num(rng), den(rng));
    TruncatedSeries a(Var::t, cs);
    CHECK(agree_through_shared_order(series_differentiate(series_integrate(a)), a));
    if (cs[0] != 0) {
      TruncatedSeries prod = series_mul(a, series_reciprocal(a));
      CHECK(agree_through_shared_order(
          prod, TruncatedSeries::constant(Var::t, 1, prod.order())));
    }
  }
}

TEST_CASE("monomial substitution") {
  TruncatedSeries h(Var::z, {1, 3, 15});
  TruncatedSeries s = series_substitute_monomial(h, 2, 0);
  CHECK(s.var() == Var::t);
  CHECK(s.order() == 4);
  CHECK(s[0] == 1);
  CHECK(s[2] == 3);
  CHECK(s[4] == 15);
  CHECK(s[1] == 0);

  TruncatedSeries same = series_substitute_monomial(h, 1, 0);
  CHECK(same.coeffs() == h.coeffs());

  TruncatedSeries cube = series_substitute_monomial(
      TruncatedSeries::constant(Var::z, 1, 0), 4, 3);
  CHECK(cube.order() == 3);
  CHECK(cube[3] == 1);
}

TEST_CASE("Euler operator") {
  TruncatedSeries u(Var::z, {1, 1, 1});
  TruncatedSeries t = apply_theta(u);
  CHECK(t[0] == 0);
  CHECK(t[1] == 1);
  CHECK(t[2] == 2);
  CHECK(apply_theta(TruncatedSeries::constant(Var::z, 5, 3)).is_zero());

  // theta applied to H_{2,0} = sum C(2k,k) z^k: coefficient of z^2 is 2*C(4,2)
  TruncatedSeries h = coefficient_series(h_spec(2, 0), 3);
  CHECK(apply_theta(h)[2] == 12);
}

TEST_CASE("factorize appendix coefficients") {
  Factorization f = factorize(Int(43263));
  CHECK(f.str() == "3^2*11*19*23");
  CHECK(factorize(Int(1)).factors.empty());
  CHECK(factorize(Int(1)).str() == "1");
  CHECK(factorize(Int(12870)).str() == "2*3^2*5*11*13");
  CHECK(factored_string(Int(-90)) == "-2*3^2*5");
}

TEST_CASE("factorize reassembles and certifies primality") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 40; ++rep) {
    Int v = Int(rng() % 1000000000000ULL) + 1;
    Factorization f = factorize(v);
    Int prod = 1;
    for (const auto& [p, e] : f.factors) {
      CHECK(boost::multiprecision::miller_rabin_test(p, 64));
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == v);
  }
  // semiprime with both factors above the trial-division limit
  Int big = Int("1000003") * Int("1000033");
  Factorization f = factorize(big);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == 1000003);
  CHECK(f.factors[1].first == 1000033);
}
