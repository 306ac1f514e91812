#ifndef TRINOMIA_FACTOR_HPP
#define TRINOMIA_FACTOR_HPP

#include <string>
#include <utility>
#include <vector>

#include "trinomia/rational.hpp"

namespace trinomia {

// Complete prime factorization of a positive integer. factors are
// (prime, exponent) pairs sorted by prime; empty for value 1.
struct Factorization {
  Int value;
  std::vector<std::pair<Int, unsigned>> factors;

  // Appendix-style rendering: "3^2*11*19*23"; "1" for the empty product.
  std::string str() const;
};

// Trial division below 10^6, then Pollard rho with Miller-Rabin certification.
Factorization factorize(const Int& v);

// Renders a possibly negative coefficient: "-2*3^2*5".
std::string factored_string(const Int& v);

} // namespace trinomia

#endif
