#include "polysmooth/obstruction.hpp"

#include <chrono>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polysmooth/errors.hpp"
#include "polysmooth/numutil.hpp"

namespace polysmooth {

namespace {

struct FilterPair {
  long p = 0;
  long root = 0;
  std::vector<unsigned char> is_qr;  // index v in [0, p); 1 when v is 0 or a QR
};

/// (prime, root) reduction pairs for the discriminant square test. Only
/// primes away from lc(f) and disc(f) are used, so a square in Q(alpha)
/// reduces to a square at every pair; one nonresidue certifies "not a
/// square", hence f(a t^2 + b t + c) irreducible by the Capelli criterion.
std::vector<FilterPair> build_filter(const IntPoly& f, unsigned want) {
  std::vector<FilterPair> pairs;
  Int bad = f.lead() * resultant(f, f.derivative());
  if (bad == 0) throw Error("cannot filter with a repeated-root polynomial");
  for (Int p(3); pairs.size() < want && p < 20000; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
    if (bad % p == 0) continue;
    auto roots = roots_mod_p(f, p);
    if (roots.empty()) continue;
    long lp = p.get_si();
    std::vector<unsigned char> qr(lp, 0);
    qr[0] = 1;
    for (long v = 1; v < lp; ++v) qr[(v * v) % lp] = 1;
    for (const auto& r : roots) {
      if (pairs.size() >= want) break;
      pairs.push_back({lp, r.get_si(), qr});
    }
  }
  return pairs;
}

bool passes_filter(const std::vector<FilterPair>& pairs, long a, long b, long c) {
  for (const auto& fp : pairs) {
    long v = ((b * b - 4 * a * c + 4 * a * fp.root) % fp.p + fp.p * fp.p) % fp.p;
    if (!fp.is_qr[v]) return false;
  }
  return true;
}

struct Candidate {
  long a, b, c;
};

std::vector<Candidate> shell_candidates(unsigned s) {
  std::vector<Candidate> out;
  long S = static_cast<long>(s);
  for (long a = -S; a <= S; ++a) {
    if (a == 0) continue;
    for (long b = 0; b <= S; ++b) {
      for (long c = -S; c <= S; ++c) {
        if (std::max({std::labs(a), b, std::labs(c)}) != S) continue;
        out.push_back({a, b, c});
      }
    }
  }
  return out;
}

ScanResult run_scan(const IntPoly& f, unsigned H, const ScanOptions& opts, bool parallel) {
  if (f.degree() < 2) throw DegreeTooSmall("scan needs deg f >= 2");
  if (!is_irreducible(f)) throw NotIrreducible(f.str() + " is reducible");
  if (H < 1) throw BadParameters("height must be >= 1");

  auto t0 = std::chrono::steady_clock::now();
  auto pairs = build_filter(f, opts.filter_pairs);

  ScanResult result;
  result.height = H;
  result.start_shell = std::max(1u, opts.start_shell);

#ifdef _OPENMP
  int saved_threads = omp_get_max_threads();
  if (parallel && opts.threads > 0) omp_set_num_threads(opts.threads);
#endif

  for (unsigned s = result.start_shell; s <= H; ++s) {
    auto cands = shell_candidates(s);
    result.stats.candidates += cands.size();
    std::vector<ZFactorization> found(cands.size());
    std::vector<unsigned char> is_hit(cands.size(), 0);
    std::uint64_t filtered = 0, factored = 0, unknowns = 0;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel) \
    reduction(+ : filtered, factored, unknowns)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cands.size()); ++i) {
      const auto& [a, b, c] = cands[i];
      if (!passes_filter(pairs, a, b, c)) {
        ++filtered;
        continue;
      }
      ++factored;
      IntPoly sub(std::vector<Int>{Int(c), Int(b), Int(a)});
      ZFactorization z = factor_over_Z(f.compose(sub));
      if (z.single_irreducible()) {
        ++unknowns;  // filter survivor, but actually irreducible
      } else {
        is_hit[i] = 1;
        found[i] = std::move(z);
      }
    }

    result.stats.filtered += filtered;
    result.stats.factored += factored;
    result.stats.unknowns += unknowns;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (!is_hit[i]) continue;
      // soundness: the reported factorization must multiply back
      if (found[i].reconstruct() !=
          f.compose(IntPoly(std::vector<Int>{Int(cands[i].c), Int(cands[i].b), Int(cands[i].a)})))
        throw Error("scan produced an inconsistent factorization");
      result.hits.push_back(
          {Int(cands[i].a), Int(cands[i].b), Int(cands[i].c), std::move(found[i])});
    }
  }

#ifdef _OPENMP
  if (parallel && opts.threads > 0) omp_set_num_threads(saved_threads);
#endif

  result.stats.hits = result.hits.size();
  result.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace

HomogenizedForm HomogenizedForm::make(const IntPoly& f) {
  if (f.is_zero() || f.degree() < 1) throw DegreeTooSmall("cannot homogenize a constant");
  return {f, f.lead()};
}

Int HomogenizedForm::evaluate(const Int& x, const Int& y) const {
  int d = f.degree();
  Int acc = 0, xp = 1;
  std::vector<Int> ypow(d + 1);
  ypow[0] = 1;
  for (int i = 1; i <= d; ++i) ypow[i] = ypow[i - 1] * y;
  for (int i = 0; i <= d; ++i) {
    acc += f.coeff(i) * xp * ypow[d - i];
    xp *= x;
  }
  return acc;
}

ScanResult quadratic_substitution_scan(const IntPoly& f, unsigned H, const ScanOptions& opts) {
  return run_scan(f, H, opts, true);
}

ScanResult quadratic_substitution_scan_serial(const IntPoly& f, unsigned H,
                                              const ScanOptions& opts) {
  return run_scan(f, H, opts, false);
}

std::vector<RationalPointHit> rational_point_search(const IntPoly& f, unsigned H) {
  if (!is_irreducible(f)) throw NotIrreducible(f.str() + " is reducible");
  if (H < 1) throw BadParameters("height must be >= 1");
  auto phi = HomogenizedForm::make(f);
  std::vector<RationalPointHit> hits;
  long S = static_cast<long>(H);
  for (long x = -S; x <= S; ++x) {
    for (long y = -S; y <= S; ++y) {
      if (y == 0) continue;
      Int v = phi.evaluate(Int(x), Int(y)) * phi.A;
      if (v <= 0) continue;
      if (mpz_perfect_square_p(v.get_mpz_t()) == 0) continue;
      Int s;
      mpz_sqrt(s.get_mpz_t(), v.get_mpz_t());
      hits.push_back({Int(x), Int(y), s, Rat(s) / Rat(phi.A)});
    }
  }
  return hits;
}

nlohmann::ordered_json scan_report_json(const IntPoly& f, const ScanResult& result) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["f"] = f.str();
  doc["height"] = result.height;
  doc["start_shell"] = result.start_shell;
  doc["stats"] = {{"candidates", result.stats.candidates},
                  {"filtered", result.stats.filtered},
                  {"factored", result.stats.factored},
                  {"hits", result.stats.hits},
                  {"unknowns", result.stats.unknowns}};
  doc["wall_seconds"] = result.stats.wall_seconds;
  doc["hits"] = nlohmann::ordered_json::array();
  for (const auto& h : result.hits) {
    nlohmann::ordered_json j;
    j["a"] = h.a.get_str();
    j["b"] = h.b.get_str();
    j["c"] = h.c.get_str();
    j["unit"] = h.factorization.unit;
    j["content"] = h.factorization.content.get_str();
    j["factors"] = nlohmann::ordered_json::array();
    for (const auto& [poly, mult] : h.factorization.factors)
      j["factors"].push_back({{"poly", poly.str()}, {"mult", mult}});
    doc["hits"].push_back(std::move(j));
  }
  return doc;
}

}  // namespace polysmooth
