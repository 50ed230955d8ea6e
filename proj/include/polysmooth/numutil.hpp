#ifndef POLYSMOOTH_NUMUTIL_HPP
#define POLYSMOOTH_NUMUTIL_HPP

#include <cstdint>
#include <vector>

#include "polysmooth/intpoly.hpp"

namespace polysmooth {

std::vector<std::uint64_t> primes_below(std::uint64_t x);  // primes p < x

std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);  // ascending

Int gcd_int(const Int& a, const Int& b);
Int lcm_int(const Int& a, const Int& b);

/// Inverse of a mod m (m > 0); throws NotCoprime.
Int inverse_mod(const Int& a, const Int& m);

/// x with x = r1 (mod m1), x = r2 (mod m2); throws NotCoprime on conflict.
/// Returns (x, lcm(m1, m2)).
std::pair<Int, Int> crt(const Int& r1, const Int& m1, const Int& r2, const Int& m2);

Int pow_mod(const Int& base, const Int& exp, const Int& mod);

/// n-th cyclotomic polynomial by iterated exact division of t^n - 1.
/// Cached; safe under concurrent access.
const IntPoly& cyclotomic(unsigned n);

/// Exact Phi_n(v) without expanding Phi_n, via the Moebius product
/// Phi_n(v) = prod_{d|n} (v^{n/d} - 1)^{mu(d)}; falls back to the expanded
/// polynomial when some base term vanishes.
Rat cyclotomic_eval(unsigned n, const Rat& v);

}  // namespace polysmooth

#endif
