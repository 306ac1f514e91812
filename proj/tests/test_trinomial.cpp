#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trinomia/trinomial.hpp"

using namespace trinomia;

TEST_CASE("convergence radius") {
  ConvergenceRadius r2 = radius(2);
  CHECK(r2.z0 == Rational(1, 4));
  CHECK(abs(r2.r - Real("0.25")) < Real("1e-30"));

  ConvergenceRadius r3 = radius(3);
  CHECK(r3.z0 == Rational(4, 27));
  Real expected3 = 2 / (3 * sqrt(Real(3)));
  CHECK(abs(r3.r - expected3) < Real("1e-30"));

  CHECK(radius(5).z0 == Rational(256, 3125));
}

TEST_CASE("x series matches the appendix for n=3") {
  TruncatedSeries x = x_series(3, 1, 17);
  std::vector<std::pair<long, long>> expect = {
      {1, 1}, {3, 1}, {5, 3}, {7, 12}, {9, 55},
      {11, 273}, {13, 1428}, {15, 7752}, {17, 43263}};
  for (auto [e, v] : expect) CHECK(x[e] == v);
  for (long k = 0; k <= 17; k += 2) CHECK(x[k] == 0);
}

TEST_CASE("x series head coefficients follow the iteration pattern") {
  // coefficient of t^n is 1, of t^(2n-1) is n, of t^(3n-2) is n(3n-1)/2
  for (int n = 2; n <= 6; ++n) {
    TruncatedSeries x = x_series(n, 1, 3 * n - 2);
    CHECK(x[n] == 1);
    CHECK(x[2 * n - 1] == n);
    CHECK(x[3 * n - 2] == Rational(Int(n) * (3 * n - 1), 2));
  }
}

TEST_CASE("x series for j=2 is the square of the principal series") {
  TruncatedSeries x22 = x_series(2, 2, 6);
  std::vector<long> vals = {1, 2, 5, 14, 42};
  for (size_t i = 0; i < vals.size(); ++i) CHECK(x22[2 + i] == vals[i]);
  TruncatedSeries sq = series_mul(x_series(2, 1, 6), x_series(2, 1, 6));
  CHECK(agree_through_shared_order(sq, x22));
}

TEST_CASE("x series coefficients are Fuss-Catalan numbers") {
  for (int n = 2; n <= 6; ++n) {
    TruncatedSeries x = x_series(n, 1, 1 + 10 * (n - 1));
    for (long k = 0; k <= 10; ++k) {
      Rational fc = Rational(shifted_binomial(n, 0, k)) / ((n - 1) * k + 1);
      CHECK(x[1 + k * (n - 1)] == fc);
    }
  }
}

TEST_CASE("y series matches the appendix") {
  TruncatedSeries y40 = y_series(4, 0, 24);
  std::vector<long> v40 = {1, 4, 28, 220, 1820, 15504, 134596, 1184040, 10518300};
  for (size_t k = 0; k < v40.size(); ++k) CHECK(y40[3 * k] == v40[k]);

  TruncatedSeries y54 = y_series(5, 4, 12);
  CHECK(y54[4] == 1);
  CHECK(y54[8] == 9);
  CHECK(y54[12] == 91);

  CHECK(y_series(3, 0, 0)[0] == 1);
}

TEST_CASE("Theorem 1 as exact series identity") {
  for (int n = 2; n <= 6; ++n) {
    long K = 60;
    TruncatedSeries x = x_series(n, 1, K);
    TruncatedSeries f = series_pow(x, static_cast<unsigned long>(n)) - x +
                        TruncatedSeries::monomial(Var::t, 1, 1, K);
    CHECK(f.is_zero());
  }
}

TEST_CASE("power and product identities across the family") {
  for (int n = 2; n <= 5; ++n) {
    TruncatedSeries x = x_series(n, 1, 40);
    TruncatedSeries y = y_series(n, 0, 40);
    for (long j = 2; j <= 4; ++j) {
      TruncatedSeries xj = series_pow(x, static_cast<unsigned long>(j));
      CHECK(agree_through_shared_order(xj, x_series(n, j, 40)));
      CHECK(agree_through_shared_order(series_mul(xj, y), y_series(n, j, 40)));
    }
    // (1 - n x^(n-1)) y = 1
    TruncatedSeries lhs = series_mul(
        TruncatedSeries::constant(Var::t, 1, 40) -
            Rational(n) * series_pow(x, static_cast<unsigned long>(n - 1)),
        y);
    CHECK(agree_through_shared_order(
        lhs, TruncatedSeries::constant(Var::t, 1, lhs.order())));
    // x' = y
    CHECK(agree_through_shared_order(series_differentiate(x), y));
  }
}

TEST_CASE("solve_principal basics") {
  ScopedPrecision prec(50);
  RootResult zero = solve_principal(3, Complex(Real(0)), Real("1e-30"));
  CHECK(zero.value == Complex(Real(0)));
  CHECK(zero.residual == 0);

  // n=2 closed form (1 - sqrt(1-4t))/2
  Real t("0.1");
  RootResult r = solve_principal(2, Complex(t), Real("1e-35"));
  Real expected = (1 - sqrt(1 - 4 * t)) / 2;
  CHECK(abs(r.value - Complex(expected)) < Real("1e-30"));
  CHECK(r.method == Method::series);
  CHECK(r.residual < Real("1e-30"));

  // n=5 against Newton
  RootResult r5 = solve_principal(5, Complex(t), Real("1e-35"));
  Real x = t;
  for (int i = 0; i < 100; ++i) {
    Real p = x * x * x * x * x - x + t;
    Real d = 5 * x * x * x * x - 1;
    x -= p / d;
  }
  CHECK(abs(r5.value - Complex(x)) < Real("1e-30"));
}

TEST_CASE("solve_principal rejects t outside the disc") {
  CHECK_THROWS_AS(solve_principal(3, Complex(Real("0.9")), Real("1e-20")),
                  OutsideDiscError);
}

TEST_CASE("y_value satisfies both defining relations") {
  ScopedPrecision prec(50);
  CHECK(y_value(4, Complex(Real(0)), Real("1e-30")).value == Complex(Real(1)));

  Real t("0.1");
  RootResult y2 = y_value(2, Complex(t), Real("1e-35"));
  Real expected = 1 / sqrt(1 - 4 * t);
  CHECK(abs(y2.value - Complex(expected)) < Real("1e-30"));

  RootResult y3 = y_value(3, Complex(Real("0.2")), Real("1e-32"));
  CHECK(abs(g_residual(3, y3.value, Complex(Real("0.2")))) < Real("1e-25"));

  // (1 - n x^(n-1)) y = 1 numerically
  RootResult x3 = solve_principal(3, Complex(Real("0.2")), Real("1e-32"));
  Complex lhs = (Complex(Real(1)) - Real(3) * (x3.value * x3.value)) * y3.value;
  CHECK(abs(lhs - Complex(Real(1))) < Real("1e-25"));
}

TEST_CASE("g_residual closed forms") {
  ScopedPrecision prec(50);
  CHECK(abs(g_residual(4, Complex(Real(1)), Complex(Real(0)))) == 0);
  Real t("0.1");
  Complex y(1 / sqrt(1 - 4 * t));
  CHECK(abs(g_residual(2, y, Complex(t))) < Real("1e-30"));
}

TEST_CASE("all branches at simple instances") {
  ScopedPrecision prec(45);
  Real eps("1e-25");
  auto r2 = solve_all_branches(2, Complex(Real("0.1")), eps);
  REQUIRE(r2.size() == 2);
  Real lo = min(r2[0].value.re, r2[1].value.re);
  Real hi = max(r2[0].value.re, r2[1].value.re);
  CHECK(abs(lo - Real("0.1127016653792583")) < Real("1e-14"));
  CHECK(abs(hi - Real("0.8872983346207417")) < Real("1e-14"));

  auto r3 = solve_all_branches(3, Complex(Real(0)), eps);
  REQUIRE(r3.size() == 3);
  Complex prod(Real(1));
  Complex sum(Real(0));
  for (auto& r : r3) sum = sum + r.value;
  CHECK(abs(sum) < Real("1e-20"));
  bool has_zero = false, has_one = false, has_minus_one = false;
  for (auto& r : r3) {
    if (abs(r.value) < Real("1e-18")) has_zero = true;
    if (abs(r.value - Complex(Real(1))) < Real("1e-18")) has_one = true;
    if (abs(r.value + Complex(Real(1))) < Real("1e-18")) has_minus_one = true;
  }
  CHECK(has_zero);
  CHECK(has_one);
  CHECK(has_minus_one);
}

TEST_CASE("branch sums vanish for random complex t") {
  ScopedPrecision prec(45);
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> mag(0.05, 2.5), ang(0.0, 6.28318);
  Real eps("1e-20");
  for (int rep = 0; rep < 25; ++rep) {
    int n = 2 + static_cast<int>(rng() % 5);
    double m = mag(rng), a = ang(rng);
    Complex t(Real(m * std::cos(a)), Real(m * std::sin(a)));
    auto roots = solve_all_branches(n, t, eps);
    REQUIRE(static_cast<int>(roots.size()) == n);
    Complex sum(Real(0));
    for (auto& r : roots) {
      sum = sum + r.value;
      Real scale = abs(t) < 1 ? Real(1) : abs(t);
      CHECK(r.residual <= eps * scale);
    }
    // Vieta: the roots sum to -[x^(n-1)] F_n, which is 1 for n=2, 0 otherwise
    Complex expected = n == 2 ? Complex(Real(1)) : Complex(Real(0));
    CHECK(abs(sum - expected) < Real("1e-12"));
  }
}

TEST_CASE("series root agrees with the nearest oracle branch") {
  ScopedPrecision prec(45);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> frac(0.01, 0.9), ang(0.0, 6.28318);
  Real eps("1e-28");
  for (int rep = 0; rep < 100; ++rep) {
    int n = 2 + static_cast<int>(rng() % 5);
    ConvergenceRadius rad = radius(n);
    double f = frac(rng), a = (rep % 2 == 0) ? 0.0 : ang(rng);
    Complex t = (Real(f) * rad.r) * unit_phase(Real(a));
    RootResult s = solve_principal(n, t, eps);
    auto roots = solve_all_branches(n, t, eps);
    Real best = -1;
    for (auto& r : roots) {
      Real d = abs(r.value - s.value);
      if (best < 0 || d < best) best = d;
    }
    CHECK(best <= s.error_bound + eps * 10);
  }
}

TEST_CASE("large t iteration") {
  ScopedPrecision prec(45);
  Real eps("1e-25");
  // n=2, t=10: compare against the quadratic formula root (1 - sqrt(1-40))/2
  RootResult r = solve_large_t(2, Complex(Real(10)), eps);
  Complex disc = Complex(Real(1) - Real(40));
  Complex sq = cpow(disc, Real(1) / 2);
  Complex root1 = (Complex(Real(1)) - sq) / Complex(Real(2));
  Complex root2 = (Complex(Real(1)) + sq) / Complex(Real(2));
  Real d = min(abs(r.value - root1), abs(r.value - root2));
  CHECK(d < Real("1e-20"));

  // n=5, t=100: |x| near 100^(1/5)
  RootResult r5 = solve_large_t(5, Complex(Real(100)), Real("1e-20"));
  CHECK(abs(abs(r5.value) - pow(Real(100), Real(1) / 5)) < Real("0.1"));
  CHECK(r5.residual <= Real("1e-12"));
  CHECK(r5.method == Method::large_t_iteration);

  // matches an oracle branch
  auto roots = solve_all_branches(5, Complex(Real(100)), Real("1e-20"));
  Real best = -1;
  for (auto& q : roots) {
    Real dd = abs(q.value - r5.value);
    if (best < 0 || dd < best) best = dd;
  }
  CHECK(best < Real("1e-15"));
}

TEST_CASE("large t iteration rejects small t") {
  CHECK_THROWS_AS(solve_large_t(3, Complex(Real("0.1")), Real("1e-20")),
                  NonContractionError);
}

TEST_CASE("large t converges for t = 10 r_n across n") {
  ScopedPrecision prec(45);
  for (int n = 3; n <= 6; ++n) {
    Complex t((10 * radius(n).r));
    RootResult r = solve_large_t(n, t, Real("1e-25"));
    auto roots = solve_all_branches(n, t, Real("1e-25"));
    Real best = -1;
    for (auto& q : roots) {
      Real d = abs(q.value - r.value);
      if (best < 0 || d < best) best = d;
    }
    CHECK(best < Real("1e-12") * pow(abs(t), Real(1) / n));
  }
}

TEST_CASE("singularity structure near the radius") {
  ScopedPrecision prec(60);
  // n=2 closed form: y * sqrt(1-4t) = 1 exactly
  for (double td : {0.01, 0.1, 0.2, 0.24}) {
    Real t(td);
    RootResult y = y_value(2, Complex(t), Real("1e-40"), 0.99);
    Complex prod = y.value * Complex(sqrt(1 - 4 * t));
    CHECK(abs(prod - Complex(Real(1))) < Real("1e-30"));
  }
  // n=3..6: finite-difference exponent of y in (r_n - t) is near -1/2
  for (int n = 3; n <= 6; ++n) {
    ConvergenceRadius rad = radius(n);
    std::vector<double> cs = {0.99, 0.995, 0.9975};
    std::vector<Real> ys, dts;
    for (double c : cs) {
      Real t = Real(c) * rad.r;
      RootResult y = y_value(n, Complex(t), Real("1e-25"), 0.9999);
      ys.push_back(abs(y.value));
      dts.push_back(rad.r - t);
    }
    for (size_t i = 0; i + 1 < ys.size(); ++i) {
      Real slope = log(ys[i + 1] / ys[i]) / log(dts[i + 1] / dts[i]);
      CHECK(slope > Real("-0.55"));
      CHECK(slope < Real("-0.45"));
    }
  }
}
