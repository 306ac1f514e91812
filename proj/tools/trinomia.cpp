// Command-line front end: solve trinomial instances, print series with
// factored coefficients, run verification suites, enumerate branches, and
// benchmark the series path against the root-finding oracle.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "trinomia/factor.hpp"
#include "trinomia/hyper.hpp"
#include "trinomia/numeric.hpp"
#include "trinomia/trinomial.hpp"
#include "trinomia/verify.hpp"

using json = nlohmann::ordered_json;
using namespace trinomia;

namespace {

// ---------------------------------------------------------------------------
// Input parsing

// One real component: a decimal/scientific literal or an exact fraction "p/q".
Real parse_real_token(std::string tok) {
  if (!tok.empty() && tok.front() == '+') tok.erase(0, 1);  // GMP rejects "+1"
  if (tok.empty()) throw std::invalid_argument("empty numeric token");
  try {
    auto slash = tok.find('/');
    if (slash != std::string::npos) {
      Rational q(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1)));
      return to_real(q);
    }
    return Real(tok);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad numeric literal '" + tok + "'");
  }
}

// Complex literal "a", "bi", or "a+bi" / "a-bi"; components decimal or "p/q".
Complex parse_complex(std::string s) {
  std::erase(s, ' ');
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return {parse_real_token(s)};

  std::string body = s.substr(0, s.size() - 1);
  // find the sign separating real and imaginary parts; skip a leading sign
  // and signs that belong to an exponent ("1e-3+2i")
  size_t split = std::string::npos;
  for (size_t i = 1; i < body.size(); ++i) {
    char c = body[i], p = body[i - 1];
    if ((c == '+' || c == '-') && p != 'e' && p != 'E' && p != '+' && p != '-')
      split = i;
  }
  if (split == std::string::npos) {
    // pure imaginary: "i", "-i", "2.5i", "1/4i"
    if (body.empty() || body == "+") return {Real(0), Real(1)};
    if (body == "-") return {Real(0), Real(-1)};
    return {Real(0), parse_real_token(body)};
  }
  Real re = parse_real_token(body.substr(0, split));
  std::string im = body.substr(split);
  if (im == "+") return {re, Real(1)};
  if (im == "-") return {re, Real(-1)};
  return {re, parse_real_token(im)};
}

// "2..6" or a single "4".
std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int v = std::stoi(s);
    return {v, v};
  }
  int lo = std::stoi(s.substr(0, dots));
  int hi = std::stoi(s.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("empty range " + s);
  return {lo, hi};
}

// ---------------------------------------------------------------------------
// Output helpers

std::string real_str(const Real& v, int prec = 4) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(prec) << v;
  return os.str();
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// Drops a numerically-zero imaginary part when the input was real, so real
// problems print real answers.
Complex cleaned(const Complex& v, const Complex& t, const Real& bound) {
  if (t.im == 0 && abs(v.im) <= bound) return {v.re};
  return v;
}

struct CommonOpts {
  int n = 2;
  std::string t_str;
  unsigned digits = 40;
  std::string eps_str;
  unsigned seed = 0x7473;
  bool json_out = false;

  Real eps() const {
    if (!eps_str.empty()) return parse_real_token(eps_str);
    return pow(Real(10), -static_cast<int>(digits) + 10);
  }
};

void add_common(CLI::App* cmd, CommonOpts* o, bool with_t) {
  cmd->add_option("--n", o->n, "degree n >= 2")->required();
  if (with_t) cmd->add_option("--t", o->t_str, "t, real or complex a+bi; components decimal or p/q")->required();
  cmd->add_option("--digits", o->digits, "working precision in decimal digits (default 40)");
  cmd->add_option("--eps", o->eps_str, "target bound (default 10^-(digits-10))");
  cmd->add_option("--seed", o->seed, "oracle perturbation seed");
  cmd->add_flag("--json", o->json_out, "line-delimited structured output");
}

// ---------------------------------------------------------------------------
// solve

int run_solve(const CommonOpts& o, const std::string& mode) {
  ScopedPrecision prec(o.digits + 15);
  Complex t = parse_complex(o.t_str);
  Real eps = o.eps();
  ConvergenceRadius rad = radius(o.n);
  Real at = abs(t);
  auto t0 = std::chrono::steady_clock::now();

  std::string chosen = mode;
  if (mode == "auto") {
    if (at <= Real(kDefaultSeriesCutoff) * rad.r) {
      chosen = "series";
    } else if (at >= Real(kDefaultLargeTThreshold) * rad.r) {
      std::cerr << "warning: |t| = " << real_str(at) << " beyond "
                << kDefaultSeriesCutoff << "*r_" << o.n
                << "; using large-|t| iteration\n";
      chosen = "large-t";
    } else {
      std::cerr << "warning: |t| = " << real_str(at) << " beyond "
                << kDefaultSeriesCutoff << "*r_" << o.n
                << " = " << real_str(Real(kDefaultSeriesCutoff) * rad.r)
                << "; routing to the oracle\n";
      chosen = "oracle";
    }
  }

  RootResult x;
  if (chosen == "series") {
    x = solve_principal(o.n, t, eps);
  } else if (chosen == "large-t") {
    try {
      x = solve_large_t(o.n, t, eps);
    } catch (const NonContractionError& e) {
      if (mode != "auto") throw;
      std::cerr << "warning: " << e.what() << "; falling back to the oracle\n";
      chosen = "oracle";
    }
  }
  if (chosen == "oracle") {
    // principal branch = the root continuing x(0)=0: smallest magnitude
    auto roots = solve_all_branches(o.n, t, eps, o.seed);
    x = roots[0];
    for (const auto& r : roots)
      if (abs(r.value) < abs(x.value)) x = r;
  }

  // companion value y = 1/(1 - n x^(n-1)) = x'(t)
  Complex y;
  Real gres;
  if (chosen == "series" && at > 0) {
    RootResult yr = y_value(o.n, t, eps);
    y = yr.value;
    gres = yr.residual;
  } else {
    Complex xp(Real(1));
    for (int i = 0; i < o.n - 1; ++i) xp = xp * x.value;
    y = Complex(Real(1)) / (Complex(Real(1)) - Real(o.n) * xp);
    gres = abs(g_residual(o.n, y, t));
  }
  double ms = elapsed_ms(t0);

  Complex xc = cleaned(x.value, t, x.error_bound > 0 ? x.error_bound : eps);
  Complex yc = cleaned(y, t, eps);
  if (o.json_out) {
    json rec;
    rec["command"] = "solve";
    rec["n"] = o.n;
    rec["t"] = o.t_str;
    rec["eps"] = real_str(eps);
    rec["method"] = method_name(x.method);
    rec["terms"] = x.terms_used;
    rec["x"] = to_string(xc, o.digits);
    rec["x_residual"] = real_str(x.residual);
    rec["x_bound"] = real_str(x.error_bound);
    rec["y"] = to_string(yc, o.digits);
    rec["y_residual"] = real_str(gres);
    rec["time_ms"] = ms;
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << "n        = " << o.n << "\n"
              << "t        = " << to_string(t, o.digits) << "\n"
              << "method   = " << method_name(x.method) << "\n"
              << "terms    = " << x.terms_used << "\n"
              << "x        = " << to_string(xc, o.digits) << "\n"
              << "|F(x,t)| = " << real_str(x.residual) << "\n"
              << "bound    = " << real_str(x.error_bound) << "\n"
              << "y        = " << to_string(yc, o.digits) << "\n"
              << "|G(y,t)| = " << real_str(gres) << "\n"
              << "time     = " << std::fixed << std::setprecision(2) << ms
              << " ms\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// series

int run_series(const CommonOpts& o, const std::string& kind, long j, long order,
               bool factored) {
  if (kind == "x" && j < 1)
    throw std::domain_error("kind x requires --j >= 1");
  if (j < 0) throw std::domain_error("--j must be >= 0");

  TruncatedSeries s =
      kind == "x" ? x_series(o.n, j, order) : y_series(o.n, j, order);
  std::string name = (kind == "x" ? "x_{" : "y_{") + std::to_string(o.n) +
                     "," + std::to_string(j) + "}(t)";
  std::string pref = j == 0 ? "" : j == 1 ? "t * " : "t^" + std::to_string(j) + " * ";
  std::string spec_str =
      kind == "x" ? x_spec(o.n, j).second.str() : h_spec(o.n, j).str();
  // the argument variable is z = t^(n-1)
  if (auto pos = spec_str.rfind('z'); pos != std::string::npos)
    spec_str.replace(pos, 1,
                     o.n == 2 ? "t" : "t^" + std::to_string(o.n - 1));

  json rows = json::array();
  std::ostringstream table;
  for (long k = 0; k <= s.order(); ++k) {
    const Rational& c = s[k];
    if (c == 0) continue;
    std::string value = c.str();
    std::string fact;
    if (factored && denominator(c) == 1) fact = factored_string(numerator(c));
    if (o.json_out) {
      json row;
      row["exponent"] = k;
      row["value"] = value;
      if (factored) row["factored"] = fact;
      rows.push_back(row);
    } else {
      table << "t^" << std::left << std::setw(6) << k << std::setw(28) << value;
      if (factored) table << fact;
      table << "\n";
    }
  }

  if (o.json_out) {
    json rec;
    rec["command"] = "series";
    rec["n"] = o.n;
    rec["kind"] = kind;
    rec["j"] = j;
    rec["order"] = order;
    rec["function"] = name + " = " + pref + spec_str;
    rec["coefficients"] = rows;
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << name << " = " << pref << spec_str << "\n" << table.str();
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const CommonOpts& o, const std::string& suite,
               const std::string& n_range, long K) {
  auto [def_lo, def_hi] = suite == "theorem1" || suite == "appendix" ||
                                  suite == "branches" || suite == "all"
                              ? std::pair{2, 6}
                              : std::pair{2, 5};
  int lo = def_lo, hi = def_hi;
  if (!n_range.empty()) std::tie(lo, hi) = parse_range(n_range);

  std::vector<CheckReport> reports;
  auto want = [&](const char* s) { return suite == "all" || suite == s; };

  if (want("theorem1"))
    for (int n = lo; n <= hi; ++n)
      reports.push_back(check_theorem1(n, K > 0 ? K : 60));
  if (want("powers"))
    for (int n = lo; n <= std::min(hi, 5); ++n)
      for (long j = 2; j <= 4; ++j)
        reports.push_back(check_powers(n, j, K > 0 ? K : 40));
  if (want("lemma3"))
    for (int n = lo; n <= std::min(hi, 5); ++n)
      reports.push_back(check_lemma3(n, K > 0 ? K : 40));
  if (want("lemma4"))
    for (int n = lo; n <= std::min(hi, 5); ++n)
      reports.push_back(check_lemma4(n, K > 0 ? K : 12));
  if (want("lemma5"))
    for (int n = lo; n <= std::min(hi, 5); ++n) {
      for (long j = 1; j <= 2; ++j)
        for (long l = j; l <= 2; ++l)
          reports.push_back(check_lemma5_xx(n, j, l, K > 0 ? K : 20));
      for (long j = 1; j <= 2; ++j)
        for (long l = 0; l <= 2; ++l)
          reports.push_back(check_lemma5_xy(n, j, l, K > 0 ? K : 20));
    }
  if (want("appendix"))
    for (int n = std::max(lo, 2); n <= std::min(hi, 6); ++n)
      reports.push_back(regenerate_appendix(n, default_fixture_dir()));
  if (want("branches")) {
    ScopedPrecision prec(o.digits + 15);
    for (int n = lo; n <= hi; ++n) {
      Real r = radius(n).r;
      reports.push_back(
          check_branch_relations(n, Complex(Real("0.3") * r), Real("1e-10")));
      reports.push_back(check_branch_relations(
          n, Complex(Real("0.2") * r, Real("0.1") * r), Real("1e-10")));
    }
  }

  int failures = 0;
  for (const auto& r : reports) {
    if (!r.pass) ++failures;
    if (o.json_out) {
      json rec;
      rec["command"] = "verify";
      rec["name"] = r.name;
      rec["parameters"] = r.parameters;
      rec["pass"] = r.pass;
      rec["witness"] = r.witness;
      std::cout << rec.dump() << "\n";
    } else {
      std::cout << r.str() << "\n";
    }
  }
  if (!o.json_out)
    std::cout << reports.size() << " check(s), " << failures << " failure(s)\n";
  return failures > 0 ? 3 : 0;
}

// ---------------------------------------------------------------------------
// branches

int run_branches(const CommonOpts& o) {
  ScopedPrecision prec(o.digits + 15);
  Complex t = parse_complex(o.t_str);
  Real eps = o.eps();
  auto roots = solve_all_branches(o.n, t, eps, o.seed);

  Complex sum;
  json rows = json::array();
  for (size_t i = 0; i < roots.size(); ++i) {
    const Complex& x = roots[i].value;
    sum = sum + x;
    Complex xp(Real(1));
    for (int k = 0; k < o.n - 1; ++k) xp = xp * x;
    Complex y = Complex(Real(1)) / (Complex(Real(1)) - Real(o.n) * xp);
    Real gres = abs(g_residual(o.n, y, t));
    Complex xc = cleaned(x, t, eps);
    y = cleaned(y, t, eps);
    if (o.json_out) {
      json row;
      row["x"] = to_string(xc, o.digits);
      row["f_residual"] = real_str(roots[i].residual);
      row["y"] = to_string(y, o.digits);
      row["g_residual"] = real_str(gres);
      rows.push_back(row);
    } else {
      std::cout << "root " << i << ": x = " << to_string(xc, o.digits)
                << "   |F| = " << real_str(roots[i].residual)
                << "   y = " << to_string(y, 10)
                << "   |G| = " << real_str(gres) << "\n";
    }
  }
  // Vieta: the branch sum is 1 for n=2 (the -x term), 0 for n>=3
  Complex expected = o.n == 2 ? Complex(Real(1)) : Complex(Real(0));
  if (o.json_out) {
    json rec;
    rec["command"] = "branches";
    rec["n"] = o.n;
    rec["t"] = o.t_str;
    rec["roots"] = rows;
    rec["branch_sum"] = to_string(cleaned(sum, t, eps), o.digits);
    rec["branch_sum_defect"] = real_str(abs(sum - expected));
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << "branch sum = " << to_string(cleaned(sum, t, eps), 10)
              << "  (defect " << real_str(abs(sum - expected)) << ")\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct GridCell {
  Real scale;   // numeric value of the cell
  bool radius_relative;  // true if given with the "r" suffix
};

// "0.5r..0.95r", "0.5r,0.7r,0.9r", or plain numbers; ranges expand to `steps`
// equally spaced points.
std::vector<GridCell> parse_grid(const std::string& spec, int steps) {
  auto one = [](std::string tok) -> GridCell {
    bool rel = !tok.empty() && tok.back() == 'r';
    if (rel) tok.pop_back();
    return {parse_real_token(tok), rel};
  };
  std::vector<GridCell> cells;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      cells.push_back(one(item));
      continue;
    }
    GridCell a = one(item.substr(0, dots));
    GridCell b = one(item.substr(dots + 2));
    if (a.radius_relative != b.radius_relative)
      throw std::invalid_argument("grid range mixes absolute and r-relative");
    for (int i = 0; i < steps; ++i) {
      Real f = steps == 1 ? Real(0) : Real(i) / (steps - 1);
      cells.push_back({a.scale + f * (b.scale - a.scale), a.radius_relative});
    }
  }
  if (cells.empty()) throw std::invalid_argument("empty t-grid");
  return cells;
}

int run_bench(const CommonOpts& o, const std::string& n_range,
              const std::string& grid_spec, int steps, bool csv) {
  ScopedPrecision prec(o.digits + 15);
  auto [lo, hi] = parse_range(n_range);
  auto cells = parse_grid(grid_spec, steps);
  Real eps = o.eps();

  const char* header =
      "n,t,t_over_r,series_terms,series_ms,series_residual,oracle_ms,oracle_residual";
  if (csv)
    std::cout << header << "\n";
  else if (!o.json_out)
    std::cout << std::left << std::setw(3) << "n" << std::setw(12) << "t"
              << std::setw(9) << "t/r" << std::setw(7) << "terms"
              << std::setw(10) << "ser ms" << std::setw(13) << "ser resid"
              << std::setw(10) << "orc ms" << "orc resid\n";

  for (int n = lo; n <= hi; ++n) {
    Real r = radius(n).r;
    for (const auto& cell : cells) {
      Real t_abs = cell.radius_relative ? cell.scale * r : cell.scale;
      Complex t(t_abs);
      Real ratio = t_abs / r;

      long terms = -1;
      double ser_ms = 0;
      std::string ser_res = "-";
      // slack keeps a grid cell given exactly as "0.95r" on the series path
      if (ratio <= Real(kDefaultSeriesCutoff) * (1 + Real("1e-12"))) {
        auto t0 = std::chrono::steady_clock::now();
        RootResult x = solve_principal(n, t, eps, kDefaultSeriesCutoff * (1 + 1e-9));
        ser_ms = elapsed_ms(t0);
        terms = x.terms_used;
        ser_res = real_str(x.residual, 2);
      }

      auto t1 = std::chrono::steady_clock::now();
      auto roots = solve_all_branches(n, t, eps, o.seed);
      double orc_ms = elapsed_ms(t1);
      RootResult principal = roots[0];
      for (const auto& rr : roots)
        if (abs(rr.value) < abs(principal.value)) principal = rr;

      std::ostringstream tstr, rstr;
      tstr << std::setprecision(6) << t_abs;
      rstr << std::fixed << std::setprecision(4) << ratio;
      if (o.json_out && !csv) {
        json rec;
        rec["command"] = "bench";
        rec["n"] = n;
        rec["t"] = tstr.str();
        rec["t_over_r"] = rstr.str();
        rec["series_terms"] = terms;
        rec["series_ms"] = ser_ms;
        rec["series_residual"] = ser_res;
        rec["oracle_ms"] = orc_ms;
        rec["oracle_residual"] = real_str(principal.residual, 2);
        std::cout << rec.dump() << "\n";
      } else if (csv) {
        std::cout << n << "," << tstr.str() << "," << rstr.str() << ","
                  << (terms < 0 ? std::string("-") : std::to_string(terms))
                  << "," << ser_ms << "," << ser_res << "," << orc_ms << ","
                  << real_str(principal.residual, 2) << "\n";
      } else {
        std::cout << std::left << std::setw(3) << n << std::setw(12)
                  << tstr.str() << std::setw(9) << rstr.str() << std::setw(7)
                  << (terms < 0 ? std::string("-") : std::to_string(terms))
                  << std::setw(10) << std::fixed << std::setprecision(2)
                  << ser_ms << std::setw(13) << ser_res << std::setw(10)
                  << orc_ms << real_str(principal.residual, 2) << "\n";
      }
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"trinomia: solves x^n - x + t = 0 and its companion by "
               "generalized hypergeometric series"};
  app.require_subcommand(1);

  CommonOpts so;
  std::string mode = "auto";
  CLI::App* solve = app.add_subcommand("solve", "solve for the principal root");
  add_common(solve, &so, true);
  solve->add_option("--mode", mode, "auto|series|oracle|large-t")
      ->check(CLI::IsMember({"auto", "series", "oracle", "large-t"}));

  CommonOpts se;
  std::string kind;
  long j = 0, order = 20;
  bool factored = false;
  CLI::App* series = app.add_subcommand("series", "print series coefficients");
  add_common(series, &se, false);
  series->add_option("--kind", kind, "x or y")
      ->required()
      ->check(CLI::IsMember({"x", "y"}));
  series->add_option("--j", j, "family index");
  series->add_option("--order", order, "truncation order in t");
  series->add_flag("--factored", factored, "print prime factorizations");

  CommonOpts ve;
  std::string suite = "all", n_range;
  long K = 0;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option(
      "--suite", suite,
      "all|theorem1|powers|lemma3|lemma4|lemma5|appendix|branches")
      ->check(CLI::IsMember({"all", "theorem1", "powers", "lemma3", "lemma4",
                             "lemma5", "appendix", "branches"}));
  verify->add_option("--n", n_range, "degree range, e.g. 2..5");
  verify->add_option("--K", K, "truncation order override");
  verify->add_option("--digits", ve.digits, "working precision in decimal digits");
  verify->add_flag("--json", ve.json_out, "line-delimited structured output");

  CommonOpts br;
  CLI::App* branches = app.add_subcommand("branches", "enumerate all n roots");
  add_common(branches, &br, true);

  CommonOpts be;
  std::string bn_range = "2..6", grid = "0.5r..0.9r";
  int steps = 5;
  bool csv = false;
  CLI::App* bench = app.add_subcommand("bench", "series vs oracle benchmark");
  bench->add_option("--n", bn_range, "degree range, e.g. 2..6");
  bench->add_option("--t", grid, "t-grid: values or ranges, 'r' suffix = times r_n");
  bench->add_option("--steps", steps, "points per grid range");
  bench->add_option("--digits", be.digits, "working precision in decimal digits");
  bench->add_option("--eps", be.eps_str, "target bound");
  bench->add_option("--seed", be.seed, "oracle perturbation seed");
  bench->add_flag("--csv", csv, "comma-separated output");
  bench->add_flag("--json", be.json_out, "line-delimited structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) return run_solve(so, mode);
    if (series->parsed()) return run_series(se, kind, j, order, factored);
    if (verify->parsed()) return run_verify(ve, suite, n_range, K);
    if (branches->parsed()) return run_branches(br);
    if (bench->parsed()) return run_bench(be, bn_range, grid, steps, csv);
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what()
              << " (best bound " << real_str(e.best_bound) << ")\n";
    return 4;
  } catch (const OutsideDiscError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonContractionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
