#include "polysmooth/numutil.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace polysmooth {

std::vector<std::uint64_t> primes_below(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  if (x <= 2) return out;
  std::vector<bool> sieve(x, true);
  for (std::uint64_t i = 2; i < x; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j < x; j += i) sieve[j] = false;
  }
  return out;
}

namespace {

std::vector<std::pair<std::uint64_t, unsigned>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> f;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto [p, e] : trial_factor(n)) r -= r / p;
  return n == 0 ? 0 : r;
}

int moebius(std::uint64_t n) {
  if (n == 0) return 0;
  int sign = 1;
  for (auto [p, e] : trial_factor(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : trial_factor(n)) {
    std::size_t sz = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm_int(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int inverse_mod(const Int& a, const Int& m) {
  Int inv;
  if (!mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw NotCoprime("no inverse of " + a.get_str() + " mod " + m.get_str());
  return inv;
}

std::pair<Int, Int> crt(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
  Int g = gcd_int(m1, m2);
  if ((r1 - r2) % g != 0)
    throw NotCoprime("CRT residues conflict modulo gcd " + g.get_str());
  Int l = lcm_int(m1, m2);
  Int m1g = m1 / g, m2g = m2 / g;
  Int inv = inverse_mod(m1g % m2g, m2g);
  Int k = ((r2 - r1) / g % m2g) * inv % m2g;
  Int x = (r1 + m1 * k) % l;
  if (x < 0) x += l;
  return {x, l};
}

Int pow_mod(const Int& base, const Int& exp, const Int& mod) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

const IntPoly& cyclotomic(unsigned n) {
  static std::map<unsigned, IntPoly> cache;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  IntPoly result;
  if (n == 1) {
    result = IntPoly{-1, 1};
  } else {
    // (t^n - 1) / prod of Phi_d over proper divisors d.
    IntPoly num = IntPoly::monomial(1, n) - IntPoly{1};
    for (std::uint64_t d : divisors(n)) {
      if (d == n) continue;
      num = num.divide_exact(cyclotomic(static_cast<unsigned>(d)));
    }
    result = num;
  }
  return cache.emplace(n, std::move(result)).first->second;
}

Rat cyclotomic_eval(unsigned n, const Rat& v) {
  Rat num = 1, den = 1;
  for (std::uint64_t d : divisors(n)) {
    int mu = moebius(d);
    if (mu == 0) continue;
    std::uint64_t e = n / d;
    Rat acc = 1;
    Rat base = v;
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    Rat term = acc - 1;
    if (term == 0) return cyclotomic(n).evaluate(v);
    if (mu > 0)
      num *= term;
    else
      den *= term;
  }
  return num / den;
}

}  // namespace polysmooth
