#include "polysmooth/intfactor.hpp"

#include <algorithm>
#include <map>

#include "polysmooth/numutil.hpp"

namespace polysmooth {

Int PrimeFactorization::value() const {
  Int v = 1;
  for (const auto& [p, e] : entries) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

Int PrimeFactorization::largest_prime() const {
  return entries.empty() ? Int(1) : entries.back().first;
}

namespace {

bool miller_rabin_round(const Int& n, const Int& base, const Int& d, unsigned r) {
  Int x = pow_mod(base % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  unsigned r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  Int two_64 = Int(1) << 64;
  if (n < two_64) {
    // This base set is deterministic for n < 2^64 (Sinclair / FeitsmaPinch).
    for (long b : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L})
      if (!miller_rabin_round(n, Int(b), d, r)) return false;
    return true;
  }
  // Fixed-base schedule: deterministic output, 64 rounds.
  Int base = 2;
  for (int i = 0; i < 64; ++i) {
    if (!miller_rabin_round(n, base, d, r)) return false;
    base = base * Int("6364136223846793005") + Int("1442695040888963407");
    base = base % (n - 3) + 2;
  }
  return true;
}

namespace {

Int pollard_brent(const Int& n, std::uint64_t iter_cap, bool& hit_cap) {
  // Brent's cycle variant of Pollard rho; deterministic (c, x0) schedule.
  for (unsigned long c = 1;; ++c) {
    Int x = 2 + (c % 7), y = x, q = 1, g = 1, ys = y;
    std::uint64_t r = 1, used = 0;
    const unsigned long m = 128;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t lim = std::min<std::uint64_t>(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          Int diff = x > y ? x - y : y - x;
          q = q * diff % n;
        }
        g = gcd_int(q, n);
        k += lim;
        used += lim;
        if (used > iter_cap) {
          hit_cap = true;
          return Int(0);
        }
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time.
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        Int diff = x > ys ? x - ys : ys - x;
        g = gcd_int(diff, n);
      }
    }
    if (g != n) return g;
    // Cycle degenerated for this c; retry with the next increment.
  }
}

void factor_rec(const Int& n, std::map<Int, unsigned>& out, const FactorIntOptions& opts,
                bool& incomplete) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  // Perfect powers first: rho behaves poorly on p^2.
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
        std::map<Int, unsigned> sub;
        factor_rec(root, sub, opts, incomplete);
        for (const auto& [p, k] : sub) out[p] += k * e;
        return;
      }
    }
  }
  bool hit_cap = false;
  Int d = pollard_brent(n, opts.rho_iter_cap, hit_cap);
  if (hit_cap) {
    if (opts.throw_on_budget)
      throw FactorBudgetExceeded("rho iteration cap reached on " + n.get_str());
    incomplete = true;
    out[n] += 1;  // composite cofactor, flagged via PrimeFactorization::complete
    return;
  }
  factor_rec(d, out, opts, incomplete);
  factor_rec(n / d, out, opts, incomplete);
}

}  // namespace

PrimeFactorization factor_integer(const Int& n, const FactorIntOptions& opts) {
  if (n == 0) throw Error("cannot factor zero");
  Int m = abs(n);
  PrimeFactorization pf;
  if (m == 1) return pf;
  std::map<Int, unsigned> acc;
  for (std::uint64_t p = 2; p <= opts.trial_limit && Int(p) * Int(p) <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      m /= p;
      acc[Int(p)] += 1;
    }
  }
  bool incomplete = false;
  if (m > 1) factor_rec(m, acc, opts, incomplete);
  pf.entries.assign(acc.begin(), acc.end());
  pf.complete = !incomplete;
  return pf;
}

namespace {

// r-th root of a in the cyclic group (Z/q)^* of order N, q an odd prime
// power, r prime. Splits the group as (order r^t) x (order s) via the CRT
// idempotents and solves the r-part by Pohlig-Hellman discrete log; the
// primes r here are small, so the digit search is a short loop.
Int amm_root(const Int& a, const Int& r, const Int& q, const Int& N) {
  Int s = N;
  unsigned t = 0;
  while (s % r == 0) {
    s /= r;
    ++t;
  }
  if (t == 0) return pow_mod(a, inverse_mod(r, N), q);
  Int rt = 1;
  for (unsigned i = 0; i < t; ++i) rt *= r;
  // a = a_T * a_S with a_T in the r^t-torsion, a_S in the order-s part.
  Int eT = s * inverse_mod(s % rt, rt);
  Int eS = s == 1 ? Int(0) : rt * inverse_mod(rt % s, s);
  Int aT = pow_mod(a, eT, q);
  Int aS = s == 1 ? Int(1) : pow_mod(a, eS, q);
  Int rootS = s == 1 ? Int(1) : pow_mod(aS, inverse_mod(r % s, s), q);
  // Torsion generator: any g with g^{N/r} != 1.
  Int g = 2;
  while (gcd_int(g, q) != 1 || pow_mod(g, N / r, q) == 1) ++g;
  Int K = pow_mod(g, s, q);  // order exactly r^t
  // Discrete log y with K^y = aT, digit by digit base r.
  Int y = 0, rpow = 1;
  Int omega = pow_mod(K, rt / r, q);  // order r
  for (unsigned i = 0; i < t; ++i) {
    Int exp = rt;
    for (unsigned j = 0; j <= i; ++j) exp /= r;
    Int target = pow_mod(aT * inverse_mod(pow_mod(K, y, q), q) % q, exp, q);
    Int digit = 0, cur = 1;
    while (cur != target) {
      cur = cur * omega % q;
      ++digit;
      if (digit >= r) throw Error("not an r-th power in the torsion subgroup");
    }
    y += digit * rpow;
    rpow *= r;
  }
  if (y % r != 0) throw Error("element is not an r-th power");
  Int rootT = pow_mod(K, y / r, q);
  return rootT * rootS % q;
}

// Root of x^k = a (mod q), q = p^e an odd prime power, gcd(a, q) = 1, k odd.
Int kth_root_prime_power(Int a, const Int& k, const Int& p, unsigned e, const Int& q) {
  Int order = q / p * (p - 1);  // = phi(p^e), cyclic for odd p
  a %= q;
  Int kk = k;
  // Peel prime factors r of gcd(k, order) by AMM; finish by inverse exponent.
  while (true) {
    Int g = gcd_int(kk, order);
    if (g == 1) break;
    // smallest prime factor of g
    Int r = 2;
    while (g % r != 0) ++r;
    a = amm_root(a, r, q, order);
    kk /= r;
    while (kk % r == 0) {
      a = amm_root(a, r, q, order);
      kk /= r;
    }
  }
  if (kk > 1) a = pow_mod(a, inverse_mod(kk, order), q);
  return a;
}

// Root of x^k = a (mod 2^e), a odd. (Z/2^e)^* = <-1> x <5> for e >= 3;
// take the discrete log of a base 5 digit by digit and divide it by k.
Int kth_root_two_power(const Int& a0, const Int& k, unsigned e, const Int& q) {
  Int a = ((a0 % q) + q) % q;
  if (e == 1) return 1;
  if (e == 2) {
    if (k % 2 == 1) return a;
    if (a == 1) return 1;
    throw Error("no k-th root modulo " + q.get_str());
  }
  Int half = q >> 2;  // order of 5
  bool neg = (a % 4 == 3);
  Int b = neg ? q - a : a;  // b lies in <5>
  // dlog of b base 5 in the cyclic group of order 2^{e-2}
  Int tau = 0, bit = 1;
  for (unsigned i = 0; i + 2 < e; ++i) {
    Int exp = half / (bit * 2);
    Int target = pow_mod(b * inverse_mod(pow_mod(Int(5), tau, q), q) % q, exp, q);
    if (target != 1) tau += bit;
    bit <<= 1;
  }
  unsigned v = 0;
  Int kk = k;
  while (kk % 2 == 0) {
    kk /= 2;
    ++v;
  }
  Int sign = 1;
  if (v > 0) {
    if (neg) throw Error("no k-th root modulo " + q.get_str());
    Int twov = Int(1) << v;
    if (tau % twov != 0) throw Error("no k-th root modulo " + q.get_str());
    tau /= twov;
  } else if (neg) {
    sign = q - 1;
  }
  Int u = tau * inverse_mod(kk % half, half) % half;
  return sign * pow_mod(Int(5), u, q) % q;
}

}  // namespace

Int kth_root_mod(const Int& value, const Int& k, const Int& modulus) {
  Int mod = abs(modulus);
  if (mod <= 1) return Int(0);
  if (gcd_int(value, mod) != 1)
    throw NotCoprime("k-th root requires gcd(value, modulus) = 1");
  PrimeFactorization pf = factor_integer(mod);
  Int x = 0, m = 1;
  for (const auto& [p, e] : pf.entries) {
    Int q;
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), e);
    Int local;
    if (p == 2) {
      local = kth_root_two_power(value, k, e, q);
    } else {
      local = kth_root_prime_power(value, k, p, e, q);
    }
    if (pow_mod(local, k, q) != ((value % q) + q) % q)
      throw Error("no k-th root modulo " + q.get_str());
    auto [nx, nm] = crt(x, m, local, q);
    x = nx;
    m = nm;
  }
  return x;
}

}  // namespace polysmooth
