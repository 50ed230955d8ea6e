#ifndef POLYSMOOTH_FACTORZ_HPP
#define POLYSMOOTH_FACTORZ_HPP

#include <vector>

#include "polysmooth/intfactor.hpp"
#include "polysmooth/intpoly.hpp"

namespace polysmooth {

/// unit * content * prod factor^mult reconstructs the input exactly; every
/// factor is primitive, irreducible, with positive lead coefficient.
struct ZFactorization {
  int unit = 1;  // +-1
  Int content = 1;
  std::vector<std::pair<IntPoly, unsigned>> factors;

  IntPoly reconstruct() const;
  bool single_irreducible() const {
    return factors.size() == 1 && factors[0].second == 1;
  }
};

/// Factorization mod a prime: squarefree decomposition, then distinct-degree
/// and Cantor-Zassenhaus equal-degree splitting. Coefficients reduced to
/// [0, p). Throws BadPrime when p divides the lead coefficient.
std::vector<std::pair<IntPoly, unsigned>> factor_mod_p(const IntPoly& p, const Int& prime);

/// Roots of p mod prime (distinct), ascending.
std::vector<Int> roots_mod_p(const IntPoly& p, const Int& prime);

/// Full factorization over Z: content extraction, Yun squarefree
/// decomposition, smallest good prime >= 3, quadratic Hensel lifting past the
/// Landau-Mignotte bound, subset recombination. Deterministic.
ZFactorization factor_over_Z(const IntPoly& p);

/// Rational input: clear denominators, factor the primitive part (Gauss).
ZFactorization factor_over_Z(const RatPoly& p);

/// True iff factor_over_Z would yield a single multiplicity-1 factor. Fast
/// path: mod-p degree-set intersection over up to 8 primes before the full
/// factorization.
bool is_irreducible(const IntPoly& p);

}  // namespace polysmooth

#endif
