#ifndef POLYSMOOTH_OBSTRUCTION_HPP
#define POLYSMOOTH_OBSTRUCTION_HPP

#include <cstdint>
#include <json.hpp>
#include <vector>

#include "polysmooth/factorz.hpp"
#include "polysmooth/intpoly.hpp"

namespace polysmooth {

/// Homogenization phi_d(x, y) = y^d f(x / y); phi_d(x, 1) = f(x) and
/// phi_d(1, 0) = A, the lead coefficient.
struct HomogenizedForm {
  IntPoly f;
  Int A;

  static HomogenizedForm make(const IntPoly& f);
  Int evaluate(const Int& x, const Int& y) const;
};

struct QuadHit {
  Int a, b, c;  // f(a t^2 + b t + c) reducible
  ZFactorization factorization;
};

struct ScanStats {
  std::uint64_t candidates = 0;  // (a, b, c) triples enumerated
  std::uint64_t filtered = 0;    // rejected by the modular square filter
  std::uint64_t factored = 0;    // full factorizations attempted
  std::uint64_t hits = 0;
  std::uint64_t unknowns = 0;  // filter survivors that factored irreducible
  double wall_seconds = 0.0;
};

struct ScanResult {
  std::vector<QuadHit> hits;
  ScanStats stats;
  unsigned height = 0;
  unsigned start_shell = 1;
};

struct ScanOptions {
  unsigned start_shell = 1;  // resume point: shells < start_shell are skipped
  unsigned filter_pairs = 24;  // precomputed (prime, root) filter pairs
  int threads = 0;             // 0 = library default
};

/// Exhaustive scan over integral a t^2 + b t + c with 1 <= max(|a|,|b|,|c|)
/// <= H, a != 0, b >= 0 (t -> -t symmetry); hits are the substitutions making
/// f reducible, in canonical shell order regardless of thread count.
ScanResult quadratic_substitution_scan(const IntPoly& f, unsigned H,
                                       const ScanOptions& opts = {});

/// Single-threaded reference implementation with identical output.
ScanResult quadratic_substitution_scan_serial(const IntPoly& f, unsigned H,
                                              const ScanOptions& opts = {});

struct RationalPointHit {
  Int x, y;  // |x|, |y| <= H, y != 0
  Int s;     // s^2 = A * phi_d(x, y) != 0; z = s / A solves A z^2 = phi_d
  Rat z;
};

/// Bounded-height search for the necessary condition A z^2 = phi_d(x, y),
/// y z != 0. Enumerates all integer pairs (not only coprime ones: for odd d
/// the square condition is not scaling-invariant, and consistency with the
/// quadratic scan needs pairs like (0, -8)).
std::vector<RationalPointHit> rational_point_search(const IntPoly& f, unsigned H);

nlohmann::ordered_json scan_report_json(const IntPoly& f, const ScanResult& result);

}  // namespace polysmooth

#endif
