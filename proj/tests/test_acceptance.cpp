// Acceptance suite: one pass/fail line per criterion; exit 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "polysmooth/constructions.hpp"
#include "polysmooth/factorz.hpp"
#include "polysmooth/numutil.hpp"
#include "polysmooth/obstruction.hpp"
#include "polysmooth/parse.hpp"
#include "polysmooth/smoothness.hpp"

using namespace polysmooth;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, const std::function<std::string()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    detail = body();
    ok = true;
  } catch (const std::exception& e) {
    detail = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("criterion %2d [%s]: %s (%.2fs)%s%s\n", n, what.c_str(), ok ? "PASS" : "FAIL",
              secs, detail.empty() ? "" : " — ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

struct Rng {
  std::uint64_t s;
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

IntPoly random_poly(Rng& rng, int deg, long coeff_bound) {
  std::vector<Int> c(deg + 1);
  for (int i = 0; i < deg; ++i) c[i] = rng.range(-coeff_bound, coeff_bound);
  do {
    c[deg] = rng.range(-coeff_bound, coeff_bound);
  } while (c[deg] == 0);
  return IntPoly(c);
}

IntPoly random_irreducible(Rng& rng, int deg, long coeff_bound) {
  for (;;) {
    IntPoly p = random_poly(rng, deg, coeff_bound);
    if (is_irreducible(p)) return p.primitive() * (p.lead() > 0 ? 1 : -1);
  }
}

}  // namespace

int main() {
  const IntPoly f4{3, 2, 1, 0, 1};  // t^4 + t^2 + 2t + 3

  criterion(1, "theta table", [] {
    auto t0 = std::chrono::steady_clock::now();
    auto t2 = theta_schinzel(2), t3 = theta_schinzel(3), t4 = theta_schinzel(4);
    require(t2.decimal.substr(0, 10) == "0.27950849", "theta(2) = " + t2.decimal);
    require(t3.decimal.substr(0, 10) == "0.38188130", "theta(3) = " + t3.decimal);
    require(t4.decimal.substr(0, 10) == "0.55901699", "theta(4) = " + t4.decimal);
    Rat diff = t2.value * 2 - t4.value;
    require(abs(diff.get_num()) * 1000000000000L < diff.get_den() || diff == 0,
            "2*theta(2) != theta(4)");
    require(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 1.0,
            "over 1s");
    return "0.27950849 / 0.38188130 / 0.55901699, 2*theta(2) = theta(4) exactly";
  });

  criterion(2, "decomposition golden identity", [] {
    auto c = decomposition_construct(IntPoly{1, -1, 4, 0, 1}, IntPoly{-2, 2, 1},
                                     IntPoly{1, 0, 1});
    require(c.factors.size() == 2, "expected 2 factors");
    require(c.factors[0].poly == RatPoly(IntPoly{5, -9, 0, 4, 1}), "first factor wrong");
    require(c.factors[1].poly == RatPoly(IntPoly{7, -7, 0, 4, 1}), "second factor wrong");
    require(c.polysmoothness == Rat(1, 2), "polysmoothness != 1/2");
    require(verify_certificate(c, VerifyMode::Symbolic).pass, "symbolic verify failed");
    return "factors t^4+4t^3-9t+5 and t^4+4t^3-7t+7, polysmoothness 1/2";
  });

  criterion(3, "quartic substitution golden identity", [&] {
    RatPoly sub = parse_poly("-(x^2+x+3)/2");
    RatPoly lhs = RatPoly(f4).compose(sub) * Rat(16);
    require(lhs.is_integral(), "16 f4(sub) not integral");
    ZFactorization z = factor_over_Z(lhs.num());
    require(z.unit == 1 && z.content == 1 && z.factors.size() == 2, "wrong factor shape");
    IntPoly q1{9, 2, 7, 2, 1}, q2{13, 10, 7, 2, 1};
    bool match = (z.factors[0].first == q1 && z.factors[1].first == q2) ||
                 (z.factors[0].first == q2 && z.factors[1].first == q1);
    require(match && z.factors[0].second == 1 && z.factors[1].second == 1,
            "factors differ from the two quartics");
    return "16*f4(-(x^2+x+3)/2) = (x^4+2x^3+7x^2+2x+9)(x^4+2x^3+7x^2+10x+13)";
  });

  criterion(4, "quartic scan to height 30 is empty", [&] {
    auto t0 = std::chrono::steady_clock::now();
    auto r = quadratic_substitution_scan(f4, 30);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    require(r.hits.empty(), std::to_string(r.hits.size()) + " unexpected hits");
    require(secs < 600.0, "over the 10 minute budget");
    return std::to_string(r.stats.candidates) + " substitutions, 0 hits";
  });

  criterion(5, "quadratic construction seed for t^2+1", [] {
    auto [seed, cert] = quadratic_construct(IntPoly{1, 0, 1}, 5);
    require(seed.k == 3 && seed.p == 5 && seed.m == 1 && seed.n == 2, "seed (k,p,m,n) wrong");
    require(seed.A == 11 && seed.B == 2 && seed.z == 7, "seed (A,B,z) wrong");
    require(cert.g == RatPoly(IntPoly{31, 147, 231, 121}), "g wrong");
    require(cert.factors.size() == 2 && cert.factors[0].expanded_degree() == 2 &&
                cert.factors[1].expanded_degree() == 4,
            "factor degrees not {2, 4}");
    require(verify_certificate(cert, VerifyMode::Symbolic).pass, "symbolic verify failed");
    auto rep = smoothness_sample(cert, 1, 1);
    require(rep.rows.size() == 1 && rep.rows[0].N == 280901, "N != 280901");
    require(rep.rows[0].identity_ok && rep.rows[0].lpf == 1093 &&
                rep.rows[0].factor_lpf == std::vector<Int>{Int(257), Int(1093)},
            "280901 != 257 * 1093 via factors");
    return "seed (3,5,1,2,11,2,7), g = 121t^3+231t^2+147t+31, N(1) = 280901 = 257*1093";
  });

  criterion(6, "quadratic construction on 4t^2+4t+9", [] {
    IntPoly f{9, 4, 4};
    std::vector<Int> ks;
    for (std::uint64_t X : {5ull, 8ull}) {
      QuadraticConstructOptions opts;
      opts.max_k = 15;
      auto [seed, cert] = quadratic_construct(f, X, opts);
      require(seed.A != 0, "A = 0");
      require(gcd_int(seed.A, seed.B) == 1, "gcd(A, B) != 1");
      require(seed.A % 4 == 0, "a does not divide A");
      require(cert.g.is_integral(), "g not integral");
      unsigned long maxphi = 0;
      for (auto d : divisors(seed.k.get_ui())) maxphi = std::max(maxphi, euler_phi(d));
      require(cert.max_factor_degree() == 2 * static_cast<long>(maxphi),
              "max factor degree != 2 max phi(d)");
      require(verify_certificate(cert, VerifyMode::Symbolic).pass, "symbolic verify failed");
      ks.push_back(seed.k);
    }
    require(ks[0] == 3 && ks[1] == 15, "k schedule not (3, 15)");
    return "X=5 gives k=3, X=8 gives k=15 (capped); all seed invariants hold";
  });

  criterion(7, "Selmer trinomial certificate", [] {
    auto c = trinomial_construct(TrinomialVariant::II, 1, -1, 6);
    require(c.f == IntPoly{-1, -1, 0, 0, 0, 0, 1}, "f != t^6-t-1");
    require(c.total_degree() == 36, "total degree != 36");
    require(c.max_factor_degree() == 12, "max factor degree != 12");
    require(c.polysmoothness == Rat(1, 3), "polysmoothness != 1/3");
    require(verify_certificate(c, VerifyMode::Symbolic).pass, "symbolic verify failed");
    return "total degree 36, max factor degree 12, polysmoothness exactly 1/3";
  });

  criterion(8, "binomial construction", [] {
    auto c = binomial_product_construct({{1, 2, 1}}, 3);
    require(c.g == RatPoly(IntPoly::monomial(2, 6)) && c.scalar == Rat(2),
            "g != 2t^6 or scalar != 2");
    require(c.factors.size() == 4, "expected a factor per divisor of 6");
    for (const auto& fe : c.factors)
      require(fe.kind == FactorExpr::Kind::CycloOfMonomial && fe.coeff == Rat(1) &&
                  fe.power == 1,
              "factor is not Phi_e(t)");
    require(verify_certificate(c, VerifyMode::Symbolic).pass, "symbolic verify failed");

    auto c2 = binomial_product_construct({{1, 2, 1}, {1, 3, 1}}, 7);
    require(c2.partition.has_value(), "no partition reported");
    require(verify_certificate(c2, VerifyMode::Probabilistic).pass,
            "probabilistic verify failed");
    std::string ineq = c2.partition->inequality_22_ok ? "holds" : "violated";
    return "g = 2t^6 with Phi_e(t) for e | 6; two-factor spec verified, inequality (2.2) " +
           ineq;
  });

  criterion(9, "Capelli degree-divisibility on 200 random compositions", [] {
    Rng rng{0x5bd1e995u};
    for (int trial = 0; trial < 200; ++trial) {
      IntPoly f = random_irreducible(rng, static_cast<int>(rng.range(2, 4)), 20);
      IntPoly g = random_poly(rng, static_cast<int>(rng.range(2, 3)), 20);
      ZFactorization z = factor_over_Z(f.compose(g));
      for (const auto& [q, mult] : z.factors)
        require(q.degree() % f.degree() == 0,
                "factor degree " + std::to_string(q.degree()) + " not divisible by deg f = " +
                    std::to_string(f.degree()) + " for f = " + f.str() + ", g = " + g.str());
    }
    return "200/200 compositions: every irreducible factor degree divisible by deg f";
  });

  criterion(10, "cubic family for t^3-2", [] {
    auto entries = cubic_family(IntPoly{-2, 0, 0, 1}, 10);
    require(entries.size() == 10, "expected 10 entries");
    bool found = false;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& e = entries[i];
      for (std::size_t j = i + 1; j < entries.size(); ++j)
        require(e.ratio != entries[j].ratio, "duplicate B/A ratio");
      require(RatPoly(e.m_beta) * RatPoly(e.m_gamma) * e.kappa ==
                  RatPoly(IntPoly{-2, 0, 0, 1}).compose(e.g),
              "f(g) != kappa * m_beta * m_gamma");
      require(is_irreducible(e.m_beta) && is_irreducible(e.m_gamma),
              "family cubic not irreducible");
      if (e.A == 1 && e.B == 0 && e.C == 0) {
        found = true;
        require(e.kappa == Rat(1, 8) && e.m_beta == IntPoly{-4, 0, 0, 1} &&
                    e.m_gamma == IntPoly{4, 0, 0, 1},
                "beta = alpha^2 entry is not (1/8)(y^3-4)(y^3+4)");
      }
    }
    require(found, "beta = alpha^2 entry missing");
    return "10 entries, distinct ratios, all verified; includes (1/8)(y^3-4)(y^3+4)";
  });

  criterion(11, "obstruction consistency", [] {
    struct Case {
      IntPoly f;
      unsigned scan_h, point_h;
    };
    for (const auto& cs : {Case{IntPoly{4, 0, 1}, 1, 16}, Case{IntPoly{-2, 0, 0, 1}, 2, 8}}) {
      auto scan = quadratic_substitution_scan(cs.f, cs.scan_h);
      require(!scan.hits.empty(), "no positive-control hits for " + cs.f.str());
      auto pts = rational_point_search(cs.f, cs.point_h);
      for (const auto& h : scan.hits) {
        Int x = h.b * h.b - 4 * h.a * h.c, y = -4 * h.a;
        bool present = std::any_of(pts.begin(), pts.end(), [&](const RationalPointHit& p) {
          return p.x == x && p.y == y;
        });
        require(present, "no rational point for hit (" + h.a.get_str() + "," +
                             h.b.get_str() + "," + h.c.get_str() + ")");
      }
    }
    auto pts = rational_point_search(IntPoly{-2, 0, 0, 1}, 3);
    bool has31 = std::any_of(pts.begin(), pts.end(), [](const RationalPointHit& p) {
      return p.x == 3 && p.y == 1 && p.s == 5;
    });
    require(has31, "(3, 1) with 25 = 5^2 missing");
    return "every scan hit yields its A z^2 = phi_d(x, y) point; (3,1) found for t^3-2";
  });

  criterion(12, "factorization roundtrip on 500 random products", [] {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng{0xc2b2ae35u};
    for (int trial = 0; trial < 500; ++trial) {
      int nf = static_cast<int>(rng.range(2, 4));
      std::vector<IntPoly> parts;
      IntPoly prod{1};
      for (int i = 0; i < nf && prod.degree() <= 12; ++i) {
        IntPoly p = random_irreducible(rng, static_cast<int>(rng.range(1, 4)), 1000);
        parts.push_back(p);
        prod = prod * p;
      }
      ZFactorization z = factor_over_Z(prod);
      std::vector<IntPoly> got;
      for (const auto& [q, mult] : z.factors)
        for (unsigned j = 0; j < mult; ++j) got.push_back(q);
      std::sort(parts.begin(), parts.end(), IntPoly::lex_less);
      std::sort(got.begin(), got.end(), IntPoly::lex_less);
      require(parts == got, "multiset mismatch for " + prod.str());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    require(secs < 60.0, "over the 60s budget");
    return "500/500 products refactor to the same multiset";
  });

  criterion(13, "smoothness of t^2+1 certificate values", [] {
    auto [seed, cert] = quadratic_construct(IntPoly{1, 0, 1}, 5);
    auto rep = smoothness_sample(cert, 10000, 10099);
    require(rep.rows.size() == 100, "expected 100 rows");
    double bound = 2.0 / 3.0 + 0.15;
    for (const auto& row : rep.rows) {
      require(row.identity_ok, "product identity failed at m = " + row.m.get_str());
      require(row.theta_emp <= bound,
              "theta_emp " + std::to_string(row.theta_emp) + " at m = " + row.m.get_str());
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max theta_emp %.4f <= %.4f", rep.max_theta, bound);
    return std::string(buf);
  });

  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  return failures ? 1 : 0;
}
