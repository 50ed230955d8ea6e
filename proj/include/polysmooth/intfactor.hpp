#ifndef POLYSMOOTH_INTFACTOR_HPP
#define POLYSMOOTH_INTFACTOR_HPP

#include <cstdint>
#include <vector>

#include "polysmooth/intpoly.hpp"

namespace polysmooth {

/// Factorization of a positive integer: primes strictly increasing, each
/// certified by is_prime.
struct PrimeFactorization {
  std::vector<std::pair<Int, unsigned>> entries;
  bool complete = true;  // false when the rho budget was exhausted

  Int value() const;
  Int largest_prime() const;  // 1 for the empty factorization
};

/// Deterministic Miller-Rabin below 2^64; 64 fixed-base rounds above.
bool is_prime(const Int& n);

struct FactorIntOptions {
  std::uint64_t trial_limit = 10'000;
  std::uint64_t rho_iter_cap = 50'000'000;
  bool throw_on_budget = true;  // else return a partial factorization
};

/// Trial division, Miller-Rabin, then Brent-cycle Pollard rho with a
/// deterministic seed schedule. Throws FactorBudgetExceeded (or flags the
/// result incomplete) past the iteration cap.
PrimeFactorization factor_integer(const Int& n, const FactorIntOptions& opts = {});

/// Some z in [0, |modulus|) with z^k = value (mod modulus), for
/// gcd(value, modulus) = 1 and odd k; deterministic. Uses inverse exponents
/// where gcd(k, lambda) = 1 and Adleman-Manders-Miller root extraction
/// otherwise. Throws Error when no root exists.
Int kth_root_mod(const Int& value, const Int& k, const Int& modulus);

}  // namespace polysmooth

#endif
