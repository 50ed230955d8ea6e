#ifndef POLYSMOOTH_SMOOTHNESS_HPP
#define POLYSMOOTH_SMOOTHNESS_HPP

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "polysmooth/constructions.hpp"
#include "polysmooth/intfactor.hpp"

namespace polysmooth {

struct SampleRow {
  Int m;
  Int N;  // |f(g(m))|
  std::vector<Rat> factor_values;
  std::vector<Int> factor_lpf;  // largest prime in each value's support
  Int lpf;                      // largest prime of N (merged; never refactors N)
  double theta_emp = 0.0;       // log lpf / log N; 0 when N <= 1
  bool identity_ok = false;     // N == |scalar * prod factor_values| exactly
};

struct SmoothnessReport {
  std::vector<SampleRow> rows;
  double max_theta = 0.0;
  Rat predicted_ratio;  // max factor degree / total degree
  long total_degree = 0;
  long max_factor_degree = 0;
};

/// Evaluates every certificate factor at each integer m in [m_lo, m_hi]
/// (structurally — huge certificates are never expanded), factors the values,
/// and merges their prime support into the exact factorization of N.
SmoothnessReport smoothness_sample(const Certificate& c, const Int& m_lo, const Int& m_hi);

/// Single-threaded reference implementation with identical output.
SmoothnessReport smoothness_sample_serial(const Certificate& c, const Int& m_lo,
                                          const Int& m_hi);

struct SmoothWitness {
  Int m;                         // sample index, n = g(m)
  Int n;
  Int value;                     // |f(n)|
  PrimeFactorization factorization;
  Int lpf;
};

struct WitnessReport {
  Certificate certificate;
  Rat eps;
  std::vector<SmoothWitness> witnesses;
};

struct WitnessOptions {
  double slack = 0.1;           // require cert ratio < eps * (1 - slack)
  std::uint64_t initial_X = 5;  // quadratic-construction prime bound schedule
  std::uint64_t max_X = 200;
  std::uint64_t max_m = 100000;  // sampling budget
  QuadraticConstructOptions quad;
};

/// Witnesses n with LPF(f(n)) <= n^eps for quadratic f, via a certificate
/// whose ratio clears eps with slack. Throws CertificateTooCoarse when no
/// prime bound within the schedule achieves the needed ratio.
WitnessReport smooth_witnesses(const IntPoly& f, const Rat& eps, unsigned count,
                               const WitnessOptions& opts = {});

nlohmann::ordered_json smoothness_report_json(const Certificate& c,
                                              const SmoothnessReport& report);
std::string smoothness_report_table(const SmoothnessReport& report);
std::string smoothness_report_csv(const SmoothnessReport& report);

}  // namespace polysmooth

#endif
