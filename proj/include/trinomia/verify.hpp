#ifndef TRINOMIA_VERIFY_HPP
#define TRINOMIA_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trinomia/numeric.hpp"
#include "trinomia/rational.hpp"
#include "trinomia/series.hpp"

namespace trinomia {

struct CheckReport {
  std::string name;
  std::map<std::string, std::string> parameters;
  bool pass = false;
  std::string witness;  // first failing order or failing residual; empty on pass

  std::string str() const;
};

// Single-coefficient perturbation applied to one internally built stream;
// lets tests demonstrate that each formal check can actually fail.
struct Sabotage {
  long index = 0;
  Rational delta = 1;
};

// x^n - x + t vanishes identically and x' = y_{n,0}.
CheckReport check_theorem1(int n, long K,
                           const std::optional<Sabotage>& sab = std::nullopt);

// x^j = x_{n,j} and x^j y = y_{n,j}.
CheckReport check_powers(int n, long j, long K,
                         const std::optional<Sabotage>& sab = std::nullopt);

// The alternating (1/y, d/dt) chain with n-1 derivatives is the constant -n!.
CheckReport check_lemma3(int n, long K,
                         const std::optional<Sabotage>& sab = std::nullopt);

// Gaussian-moment expansion of exp(zbar (z+t)^n) reproduces C(nm, m).
CheckReport check_lemma4(int n, long M,
                         const std::optional<Sabotage>& sab = std::nullopt);

// Product identities between the pFq streams (plain z, gamma = 1):
// the x-type stream for j times the x-type stream for l equals the x-type
// stream for j+l.
CheckReport check_lemma5_xx(int n, long j, long l, long K,
                            const std::optional<Sabotage>& sab = std::nullopt);

// The x-type stream for j times the y-type stream for l equals the y-type
// stream for j+l (first lower parameter read as (j+l+1)/(n-1); if that
// reading fails, the witness also reports the (l+l+1)/(n-1) reading).
CheckReport check_lemma5_xy(int n, long j, long l, long K,
                            const std::optional<Sabotage>& sab = std::nullopt);

// Sum of oracle branches and per-branch y/G_n relations at one t.
CheckReport check_branch_relations(int n, const Complex& t, const Real& eps);

// One golden table from the source appendix: which function it lists.
// The printed exponents and factored coefficients live in the fixture
// file fixtures/appendix/<id>.tsv.
struct AppendixTable {
  std::string id;   // e.g. "n3_y0inv"
  int n;
  char kind;        // 'x' = x_{n,j}, 'y' = y_{n,j}, 'r' = 1/y_{n,0}
  long j;
  std::string function;  // rendered name, e.g. "y_0^{-1}(t)"
};

const std::vector<AppendixTable>& appendix_tables();

// Known misprints in the source tables, consulted before declaring failure.
// Each entry: fixture row id -> computed correct value. Currently empty;
// the one known misprint (the n=6 y_0 argument printed as t^6 where the
// series runs in powers of t^5) concerns a rendered argument, not a
// coefficient, and is documented in the fixture header.
const std::map<std::string, Int>& appendix_typo_list();

// Recomputes every coefficient of the appendix tables for one n and
// compares value and factorization against the golden fixtures.
CheckReport regenerate_appendix(int n, const std::string& fixture_dir,
                                std::string* rendered = nullptr);

std::string default_fixture_dir();

} // namespace trinomia

#endif
