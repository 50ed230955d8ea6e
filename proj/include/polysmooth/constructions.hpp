#ifndef POLYSMOOTH_CONSTRUCTIONS_HPP
#define POLYSMOOTH_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polysmooth/intpoly.hpp"

namespace polysmooth {

/// A certificate factor, kept unexpanded so huge constructions stay cheap.
struct FactorExpr {
  enum class Kind { Explicit, CycloOfMonomial, Shifted };

  Kind kind = Kind::Explicit;
  RatPoly poly;          // Explicit
  unsigned e = 0;        // CycloOfMonomial: Phi_e(coeff * t^power)
  Rat coeff;
  unsigned long power = 0;
  IntPoly base;          // Shifted: base(A*t + z)
  Int shift_a;
  Int shift_z;

  static FactorExpr make_explicit(RatPoly p);
  static FactorExpr make_cyclo(unsigned e, Rat coeff, unsigned long power);
  static FactorExpr make_shifted(IntPoly base, Int a, Int z);

  long expanded_degree() const;      // without expansion
  RatPoly expand() const;            // may be large
  Rat evaluate(const Rat& x) const;  // exact, never expands
  bool operator==(const FactorExpr& o) const;
};

struct QuadraticSeed {
  Int p;        // split prime
  unsigned h;   // |Norm(m a alpha + n)| = p^h
  Int m, n;
  Int k;        // odd product of small primes
  Int A, B;     // (m a alpha + n)^k = A alpha + B
  Int z;        // z^k = B (mod A)
};

struct PrimePartition {
  std::uint64_t y = 0;
  std::uint64_t k = 1;
  std::vector<std::vector<std::uint64_t>> sets;
  std::vector<Int> gamma;   // per-set prime products
  std::vector<Int> Gamma_j; // residual products
  Int Gamma = 1;            // product of all gamma
  bool inequality_22_ok = true;
};

struct Certificate {
  IntPoly f;
  RatPoly g;
  Rat scalar = Rat(1);
  std::vector<FactorExpr> factors;
  std::string method;
  Rat polysmoothness;
  std::string notes;
  std::optional<QuadraticSeed> seed;
  std::optional<PrimePartition> partition;

  long total_degree() const { return static_cast<long>(f.degree()) * g.degree(); }
  long max_factor_degree() const;
  Rat ratio() const;  // max factor degree / total degree
};

struct CubicFamilyEntry {
  Int A, B, C;  // beta = A alpha^2 + B alpha + C
  RatPoly g;
  Rat r;        // gamma = r - beta
  Rat kappa;
  IntPoly m_beta, m_gamma;
  Rat ratio;    // B/A
};

struct ThetaResult {
  Rat value;            // exact truncated product
  std::string decimal;  // rendered to 12 places
  unsigned terms;
};

/// theta(d) per the limiting-product recursion u_1 = d-1, u_{i+1} = u_i^2 - 2:
/// P(d) = prod (1 - 1/u_i); theta(d) = P(2d)/2 for d = 2, 3 and P(d) for d >= 4.
ThetaResult theta_schinzel(unsigned d, const Rat& tol = Rat(1, 1000000000000L));

/// f(t + f(t)) = f(t) * h(t).
Certificate trivial_step(const IntPoly& f);

/// Substitution g = -(a_0 t^{d-1} + ... + a_{d-1}) for monic irreducible f;
/// the reversal of f (the minimal polynomial of 1/alpha) divides f(g).
Certificate schinzel_step(const IntPoly& f);

/// Repeatedly split the largest factor (schinzel_step when eligible, else
/// trivial_step); stops early when no factor of degree >= 2 remains eligible.
Certificate iterate_schinzel(const IntPoly& f, unsigned steps);

struct BinomialTerm {
  Int a, b;
  unsigned long k;
};

/// Cyclotomic construction for f = prod (a_j t^{k_j} - b_j).
Certificate binomial_product_construct(const std::vector<BinomialTerm>& spec, std::uint64_t y);

struct QuadraticConstructOptions {
  Int max_k = 1000000;       // drop largest primes from k beyond this
  unsigned max_h = 24;       // norm-equation exponent budget
  std::uint64_t search_budget = 50000000;  // candidate (m, n) evaluations
};

std::pair<QuadraticSeed, Certificate> quadratic_construct(
    const IntPoly& f, std::uint64_t X, const QuadraticConstructOptions& opts = {});

/// Dispatcher: irreducible quadratics go through quadratic_construct,
/// reducible ones through the binomial construction.
Certificate polysmooth_quadratic(const IntPoly& f, std::uint64_t X,
                                 const QuadraticConstructOptions& opts = {});

/// f = g o h - t exactly; factors through the minimal polynomial of h(alpha).
Certificate decomposition_construct(const IntPoly& f, const IntPoly& g, const IntPoly& h);

enum class TrinomialVariant { I, II };

/// Variant i: f = t^k + a t^{k-1} - b, g = b^k t^{k-1} - a.
/// Variant ii: f = a t^k - t + b, g = a^{k+1} t^k + b.
Certificate trinomial_construct(TrinomialVariant v, const Int& a, const Int& b, unsigned long k);

std::vector<CubicFamilyEntry> cubic_family(const IntPoly& f, unsigned count);

enum class VerifyMode { Symbolic, Probabilistic };

struct VerifyReport {
  bool pass = false;
  VerifyMode mode = VerifyMode::Symbolic;
  bool conclusive = false;       // symbolic, or enough agreeing points
  std::string detail;            // failure witness or summary
  Rat recomputed_ratio;
  bool ratio_matches = false;
};

struct VerifyOptions {
  long symbolic_degree_cap = 5000;
  unsigned points = 32;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  int irreducibility_degree_cap = 64;
};

VerifyReport verify_certificate(const Certificate& c, VerifyMode mode,
                                const VerifyOptions& opts = {});

}  // namespace polysmooth

#endif
