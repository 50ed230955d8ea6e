#include "polysmooth/factorz.hpp"

#include <algorithm>
#include <set>

#include "polysmooth/numutil.hpp"

namespace polysmooth {

IntPoly ZFactorization::reconstruct() const {
  IntPoly r = IntPoly::constant(content * unit);
  for (const auto& [f, mult] : factors)
    for (unsigned i = 0; i < mult; ++i) r = r * f;
  return r;
}

namespace {

// --- arithmetic on polynomials mod m (m prime or prime power) --------------

using Coeffs = std::vector<Int>;

Coeffs reduce(const IntPoly& p, const Int& m) {
  Coeffs c(p.coeffs());
  for (auto& v : c) {
    v %= m;
    if (v < 0) v += m;
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int deg(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

Coeffs add_m(const Coeffs& a, const Coeffs& b, const Int& m) {
  Coeffs r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  for (auto& v : r) v %= m;
  trim(r);
  return r;
}

Coeffs sub_m(const Coeffs& a, const Coeffs& b, const Int& m) {
  Coeffs r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  for (auto& v : r) {
    v %= m;
    if (v < 0) v += m;
  }
  trim(r);
  return r;
}

Coeffs mul_m(const Coeffs& a, const Coeffs& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& v : r) v %= m;
  trim(r);
  return r;
}

Coeffs scalar_m(const Coeffs& a, const Int& s, const Int& m) {
  Coeffs r(a);
  for (auto& v : r) {
    v = v * s % m;
    if (v < 0) v += m;
  }
  trim(r);
  return r;
}

// Division by b with invertible lead; returns quotient, rem in place.
Coeffs divmod_m(Coeffs a, const Coeffs& b, const Int& m, Coeffs& rem) {
  int db = deg(b);
  Int inv = inverse_mod(b.back(), m);
  int da = deg(a);
  Coeffs q(da >= db ? da - db + 1 : 0, Int(0));
  for (int i = da; i >= db; --i) {
    if (a[i] == 0) continue;
    Int c = a[i] * inv % m;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) {
      a[i - db + j] = (a[i - db + j] - c * b[j]) % m;
      if (a[i - db + j] < 0) a[i - db + j] += m;
    }
  }
  trim(a);
  rem = std::move(a);
  trim(q);
  return q;
}

Coeffs mod_m(const Coeffs& a, const Coeffs& b, const Int& m) {
  if (deg(a) < deg(b)) return a;
  Coeffs rem;
  divmod_m(a, b, m, rem);
  return rem;
}

Coeffs monic_m(const Coeffs& a, const Int& m) {
  if (a.empty()) return a;
  return scalar_m(a, inverse_mod(a.back(), m), m);
}

Coeffs gcd_m(Coeffs a, Coeffs b, const Int& m) {
  while (!b.empty()) {
    Coeffs r = mod_m(a, b, m);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : monic_m(a, m);
}

// Extended Euclid: s*a + t*b = 1 mod m (a, b coprime mod m).
void ext_gcd_m(const Coeffs& a, const Coeffs& b, const Int& m, Coeffs& s, Coeffs& t) {
  Coeffs r0 = a, r1 = b;
  Coeffs s0 = {Int(1)}, s1 = {};
  Coeffs t0 = {}, t1 = {Int(1)};
  while (!r1.empty()) {
    Coeffs rem;
    Coeffs q = divmod_m(r0, r1, m, rem);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Coeffs s2 = sub_m(s0, mul_m(q, s1, m), m);
    s0 = std::move(s1);
    s1 = std::move(s2);
    Coeffs t2 = sub_m(t0, mul_m(q, t1, m), m);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw Error("ext_gcd_m: inputs not coprime");
  Int inv = inverse_mod(r0[0], m);
  s = scalar_m(s0, inv, m);
  t = scalar_m(t0, inv, m);
}

Coeffs powmod_m(const Coeffs& base, const Int& e, const Coeffs& f, const Int& m) {
  Coeffs r = {Int(1)};
  Coeffs b = mod_m(base, f, m);
  Int exp = e;
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) r = mod_m(mul_m(r, b, m), f, m);
    b = mod_m(mul_m(b, b, m), f, m);
    exp >>= 1;
  }
  return r;
}

Coeffs derivative_m(const Coeffs& a, const Int& m) {
  if (a.size() <= 1) return {};
  Coeffs r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    r[i - 1] = a[i] * static_cast<long>(i) % m;
    if (r[i - 1] < 0) r[i - 1] += m;
  }
  trim(r);
  return r;
}

IntPoly to_poly(const Coeffs& c) { return IntPoly(Coeffs(c)); }

// Deterministic xorshift for equal-degree splitting.
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
};

// --- squarefree factorization mod p ----------------------------------------

void squarefree_mod_p_rec(const Coeffs& f, const Int& p, unsigned long mult_scale,
                          std::vector<std::pair<Coeffs, unsigned>>& out) {
  Coeffs fp = derivative_m(f, p);
  if (fp.empty()) {
    // f = g(t^p); p-th root by Frobenius (coefficients fixed by x -> x^p).
    unsigned long pl = mpz_get_ui(p.get_mpz_t());
    Coeffs g;
    for (std::size_t i = 0; i < f.size(); i += pl) g.push_back(f[i]);
    squarefree_mod_p_rec(g, p, mult_scale * pl, out);
    return;
  }
  Coeffs c = gcd_m(f, fp, p);
  Coeffs rem;
  Coeffs w = divmod_m(f, c, p, rem);
  unsigned i = 1;
  while (deg(w) > 0) {
    Coeffs y = gcd_m(w, c, p);
    Coeffs fac = divmod_m(w, y, p, rem);
    if (deg(fac) > 0) out.emplace_back(monic_m(fac, p), i * mult_scale);
    w = std::move(y);
    c = divmod_m(c, w, p, rem);
    ++i;
  }
  if (deg(c) > 0) squarefree_mod_p_rec(c, p, mult_scale * mpz_get_ui(p.get_mpz_t()), out);
}

// --- distinct-degree + equal-degree ----------------------------------------

void equal_degree_split(const Coeffs& f, int d, const Int& p, Rng& rng,
                        std::vector<Coeffs>& out) {
  int n = deg(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  // Cantor-Zassenhaus, p odd.
  Int pd = 1;
  for (int i = 0; i < d; ++i) pd *= p;
  Int exp = (pd - 1) / 2;
  while (true) {
    Coeffs r(n);
    for (int i = 0; i < n; ++i) {
      Int v = Int(rng.next()) % p;
      r[i] = v;
    }
    trim(r);
    if (deg(r) < 1) continue;
    Coeffs w = powmod_m(r, exp, f, p);
    w = sub_m(w, {Int(1)}, p);
    Coeffs g = gcd_m(w, f, p);
    if (deg(g) > 0 && deg(g) < n) {
      Coeffs rem;
      Coeffs h = divmod_m(f, g, p, rem);
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(monic_m(h, p), d, p, rng, out);
      return;
    }
  }
}

std::vector<Coeffs> factor_squarefree_mod_p(const Coeffs& f_in, const Int& p) {
  std::vector<Coeffs> out;
  Coeffs f = monic_m(f_in, p);
  Rng rng{0x9E3779B97F4A7C15ULL ^ mpz_get_ui(p.get_mpz_t())};
  Coeffs x = {Int(0), Int(1)};
  Coeffs h = x;  // t^{p^d} mod f
  int d = 0;
  while (deg(f) >= 2 * (d + 1)) {
    ++d;
    h = powmod_m(h, p, f, p);
    Coeffs g = gcd_m(sub_m(h, x, p), f, p);
    if (deg(g) > 0) {
      equal_degree_split(g, d, p, rng, out);
      Coeffs rem;
      f = monic_m(divmod_m(f, g, p, rem), p);
      h = mod_m(h, f, p);
    }
  }
  if (deg(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const Coeffs& a, const Coeffs& b) {
    return IntPoly::lex_less(to_poly(a), to_poly(b));
  });
  return out;
}

}  // namespace

std::vector<std::pair<IntPoly, unsigned>> factor_mod_p(const IntPoly& p, const Int& prime) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (p.lead() % prime == 0)
    throw BadPrime("prime " + prime.get_str() + " divides the lead coefficient");
  Coeffs f = reduce(p, prime);
  std::vector<std::pair<IntPoly, unsigned>> result;
  if (deg(f) <= 0) return result;
  std::vector<std::pair<Coeffs, unsigned>> sqf;
  squarefree_mod_p_rec(monic_m(f, prime), prime, 1, sqf);
  for (const auto& [part, mult] : sqf)
    for (const Coeffs& fac : factor_squarefree_mod_p(part, prime))
      result.emplace_back(to_poly(fac), mult);
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    return IntPoly::lex_less(a.first, b.first);
  });
  return result;
}

std::vector<Int> roots_mod_p(const IntPoly& p, const Int& prime) {
  std::vector<Int> roots;
  Coeffs f = reduce(p, prime);
  if (deg(f) < 1) return roots;
  // gcd(t^p - t, f) collects the linear part.
  Coeffs x = {Int(0), Int(1)};
  Coeffs tp = powmod_m(x, prime, f, prime);
  Coeffs lin = gcd_m(sub_m(tp, x, prime), f, prime);
  if (deg(lin) < 1) return roots;
  Rng rng{0xD1B54A32D192ED03ULL ^ mpz_get_ui(prime.get_mpz_t())};
  std::vector<Coeffs> linears;
  equal_degree_split(lin, 1, prime, rng, linears);
  for (const Coeffs& l : linears) {
    Int r = (prime - l[0]) % prime;
    roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

// --- Hensel lifting ---------------------------------------------------------

struct HenselPair {
  Coeffs g, h, s, t;  // f = g h, s g + t h = 1 (mod m); h monic
};

// One quadratic step: lifts the pair from mod m to mod m^2.
void hensel_step(const IntPoly& f, HenselPair& pr, const Int& m) {
  Int m2 = m * m;
  Coeffs fc = reduce(f, m2);
  Coeffs e = sub_m(fc, mul_m(pr.g, pr.h, m2), m2);
  Coeffs rem;
  Coeffs q = divmod_m(mul_m(pr.s, e, m2), pr.h, m2, rem);
  Coeffs gstar = add_m(pr.g, add_m(mul_m(pr.t, e, m2), mul_m(q, pr.g, m2), m2), m2);
  Coeffs hstar = add_m(pr.h, rem, m2);
  Coeffs b = sub_m(add_m(mul_m(pr.s, gstar, m2), mul_m(pr.t, hstar, m2), m2), {Int(1)}, m2);
  Coeffs d;
  Coeffs c = divmod_m(mul_m(pr.s, b, m2), hstar, m2, d);
  pr.s = sub_m(pr.s, d, m2);
  pr.t = sub_m(pr.t, add_m(mul_m(pr.t, b, m2), mul_m(c, gstar, m2), m2), m2);
  pr.g = std::move(gstar);
  pr.h = std::move(hstar);
}

// Lift lc(f) * prod(mods) = f (mod p) to monic factors mod P (P = p^{2^j}).
// `f` has coefficients already reduced mod the working modulus at recursion
// depth > 0; all mods are monic mod p.
std::vector<Coeffs> lift_all(const IntPoly& f, const std::vector<Coeffs>& mods, const Int& p,
                             const Int& P) {
  if (mods.size() == 1) {
    Coeffs r = reduce(f, P);
    return {monic_m(r, P)};
  }
  Coeffs fp = reduce(f, p);
  Coeffs g = scalar_m(mods[0], fp.back(), p);
  Coeffs h = {Int(1)};
  for (std::size_t i = 1; i < mods.size(); ++i) h = mul_m(h, mods[i], p);
  HenselPair pr;
  ext_gcd_m(g, h, p, pr.s, pr.t);
  pr.g = g;
  pr.h = h;
  // P is p^{2^j}, so the squaring ladder lands exactly on P.
  Int m = p;
  while (m < P) {
    hensel_step(f, pr, m);
    m = m * m;
  }
  std::vector<Coeffs> out;
  out.push_back(monic_m(pr.g, m));
  std::vector<Coeffs> rest(mods.begin() + 1, mods.end());
  for (auto& r : lift_all(to_poly(pr.h), rest, p, P)) out.push_back(std::move(r));
  return out;
}

Int sym(const Int& v, const Int& m) {
  Int r = v % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

IntPoly sym_poly(const Coeffs& c, const Int& m) {
  Coeffs r(c);
  for (auto& v : r) v = sym(v, m);
  return IntPoly(std::move(r));
}

// Landau-Mignotte style coefficient bound for factors of f:
// any factor h | f has ||h||_inf <= 2^{deg f} * ||f||_2 * |lc(f)|.
Int coeff_bound(const IntPoly& f) {
  Int norm2sq = 0;
  for (const auto& c : f.coeffs()) norm2sq += c * c;
  Int norm2 = sqrt(norm2sq) + 1;
  Int b = norm2 * abs(f.lead());
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), f.degree());
  return b;
}

constexpr std::uint64_t kRecombinationCap = 1u << 20;

// Zassenhaus recombination of lifted monic modular factors.
std::vector<IntPoly> recombine(IntPoly f, std::vector<Coeffs> lifted, const Int& P) {
  std::vector<IntPoly> out;
  std::uint64_t tried = 0;
  unsigned s = 1;
  while (2 * s <= lifted.size()) {
    std::size_t r = lifted.size();
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool found = false;
    while (true) {
      if (++tried > kRecombinationCap) throw RecombinationBudget();
      // Candidate = primitive part of the symmetric lift of lc * prod subset.
      Coeffs prod = {((f.lead() % P) + P) % P};
      for (std::size_t i : idx) prod = mul_m(prod, lifted[i], P);
      IntPoly cand = sym_poly(prod, P);
      // Constant-term screen: for a genuine factor, cand(0) | lc(f) * f(0).
      Int c0 = cand.coeff(0);
      bool plausible = c0 == 0 || f.coeff(0) == 0 || (f.lead() * f.coeff(0)) % c0 == 0;
      if (!cand.is_zero() && plausible) {
        cand = cand.primitive();
        if (cand.lead() < 0) cand = -cand;
        IntPoly quot, rem;
        if (cand.degree() >= 1 && f.try_divide(cand, quot, rem) && rem.is_zero()) {
          out.push_back(cand);
          f = quot;
          std::vector<Coeffs> remaining;
          std::set<std::size_t> used(idx.begin(), idx.end());
          for (std::size_t i = 0; i < lifted.size(); ++i)
            if (!used.count(i)) remaining.push_back(lifted[i]);
          lifted = std::move(remaining);
          found = true;
          break;
        }
      }
      // next subset of size s
      int i = static_cast<int>(s) - 1;
      while (i >= 0 && idx[i] == r - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
    if (lifted.empty()) break;
  }
  if (f.degree() >= 1) {
    IntPoly last = f.primitive();
    if (last.lead() < 0) last = -last;
    out.push_back(last);
  }
  return out;
}

// Factor a primitive squarefree polynomial of degree >= 1.
std::vector<IntPoly> factor_squarefree_over_Z(const IntPoly& f) {
  if (f.degree() == 1) {
    IntPoly g = f;
    if (g.lead() < 0) g = -g;
    return {g};
  }
  // Smallest good prime >= 3: does not divide lc, squarefree mod p.
  Int p = 3;
  while (true) {
    if (is_prime(p) && f.lead() % p != 0) {
      Coeffs fp = reduce(f, p);
      if (deg(fp) == f.degree()) {
        Coeffs d = derivative_m(fp, p);
        if (!d.empty() && deg(gcd_m(fp, d, p)) == 0) break;
      }
    }
    p += 2;
  }
  auto modular = factor_mod_p(f, p);
  if (modular.size() == 1) {
    IntPoly g = f;
    if (g.lead() < 0) g = -g;
    return {g};
  }
  std::vector<Coeffs> mods;
  for (const auto& [fac, mult] : modular) mods.push_back(Coeffs(fac.coeffs()));
  Int bound = 2 * coeff_bound(f) + 1;
  Int P = p;
  while (P < bound) P = P * P;
  std::vector<Coeffs> lifted = lift_all(f, mods, p, P);
  std::vector<IntPoly> irr = recombine(f, lifted, P);
  std::sort(irr.begin(), irr.end(), IntPoly::lex_less);
  return irr;
}

// Yun's squarefree decomposition for a primitive polynomial over Z.
std::vector<std::pair<IntPoly, unsigned>> squarefree_over_Z(const IntPoly& f) {
  std::vector<std::pair<IntPoly, unsigned>> out;
  IntPoly d = f.derivative();
  IntPoly g = gcd(f, d);
  if (g.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  IntPoly w = f.divide_exact(g);
  IntPoly y = d.divide_exact(g);
  unsigned i = 1;
  while (true) {
    IntPoly z = y - w.derivative();
    if (z.is_zero()) {
      if (w.degree() >= 1) out.emplace_back(w, i);
      break;
    }
    IntPoly gi = gcd(w, z);
    if (gi.degree() >= 1) out.emplace_back(gi, i);
    w = w.divide_exact(gi);
    y = z.divide_exact(gi);
    ++i;
  }
  return out;
}

}  // namespace

ZFactorization factor_over_Z(const IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  ZFactorization z;
  z.unit = p.lead() < 0 ? -1 : 1;
  z.content = p.content();
  IntPoly w = p.primitive();
  if (z.unit < 0) w = -w;
  if (w.degree() < 1) return z;
  for (const auto& [part, mult] : squarefree_over_Z(w)) {
    IntPoly sp = part;
    if (sp.lead() < 0) sp = -sp;  // sign folded into unit already
    for (const IntPoly& fac : factor_squarefree_over_Z(sp))
      z.factors.emplace_back(fac, mult);
  }
  std::sort(z.factors.begin(), z.factors.end(), [](const auto& a, const auto& b) {
    return IntPoly::lex_less(a.first, b.first);
  });
  return z;
}

ZFactorization factor_over_Z(const RatPoly& p) { return factor_over_Z(p.num()); }

bool is_irreducible(const IntPoly& p) {
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  // Fast path: intersect the possible factor-degree sets over 8 good primes.
  unsigned n = p.degree();
  std::set<unsigned> possible;
  for (unsigned i = 0; i <= n; ++i) possible.insert(i);
  Int prime = 2;
  int used = 0;
  while (used < 8 && prime < 2000) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    if (p.lead() % prime == 0) continue;
    Coeffs fp = reduce(p, prime);
    if (deg(fp) != p.degree()) continue;
    Coeffs d = derivative_m(fp, prime);
    if (d.empty() || deg(gcd_m(fp, d, prime)) != 0) continue;
    auto facs = factor_mod_p(p, prime);
    // subset sums of modular factor degrees
    std::set<unsigned> sums{0};
    for (const auto& [fac, mult] : facs) {
      std::set<unsigned> next = sums;
      for (unsigned v : sums) next.insert(v + fac.degree());
      sums = std::move(next);
    }
    std::set<unsigned> inter;
    for (unsigned v : possible)
      if (sums.count(v)) inter.insert(v);
    possible = std::move(inter);
    ++used;
    if (possible.size() == 2) return true;  // only {0, n} remain
  }
  ZFactorization z = factor_over_Z(p);
  return z.single_irreducible();
}

}  // namespace polysmooth
