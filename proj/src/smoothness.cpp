#include "polysmooth/smoothness.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "polysmooth/errors.hpp"

namespace polysmooth {

namespace {

double log_abs(const Int& v) {
  if (v == 0) return 0.0;
  long e = 0;
  double d = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log(std::fabs(d)) + static_cast<double>(e) * std::log(2.0);
}

void add_support(std::map<Int, long>& net, const Int& v, long sign) {
  Int a = abs(v);
  if (a <= 1) return;
  for (const auto& [p, e] : factor_integer(a).entries) net[p] += sign * static_cast<long>(e);
}

/// Exact factorization of N = |scalar * prod values| from the per-factor
/// factorizations; never factors N directly.
PrimeFactorization merged_support(const Rat& scalar, const std::vector<Rat>& values) {
  std::map<Int, long> net;
  add_support(net, scalar.get_num(), +1);
  add_support(net, scalar.get_den(), -1);
  for (const auto& v : values) {
    add_support(net, v.get_num(), +1);
    add_support(net, v.get_den(), -1);
  }
  PrimeFactorization out;
  for (const auto& [p, e] : net) {
    if (e < 0) throw Error("factor support does not merge to an integer");
    if (e > 0) out.entries.push_back({p, static_cast<unsigned>(e)});
  }
  return out;
}

SampleRow make_row(const Certificate& c, const Int& m) {
  SampleRow row;
  row.m = m;
  Rat gm = c.g.evaluate(Rat(m));
  Rat fgm = c.f.evaluate(gm);

  Rat product = c.scalar;
  for (const auto& fe : c.factors) {
    Rat v = fe.evaluate(Rat(m));
    product *= v;
    row.factor_values.push_back(v);
    Int support = abs(v.get_num()) * v.get_den();
    row.factor_lpf.push_back(support <= 1 ? Int(1)
                                          : factor_integer(support).largest_prime());
  }
  row.identity_ok = (product == fgm) && fgm.get_den() == 1;
  if (!row.identity_ok) return row;

  row.N = abs(fgm.get_num());
  if (row.N == 0) return row;
  row.lpf = merged_support(c.scalar, row.factor_values).largest_prime();
  if (row.N > 1 && row.lpf > 1) row.theta_emp = log_abs(row.lpf) / log_abs(row.N);
  return row;
}

SmoothnessReport run_sample(const Certificate& c, const Int& m_lo, const Int& m_hi,
                            bool parallel) {
  SmoothnessReport report;
  report.total_degree = c.total_degree();
  report.max_factor_degree = c.max_factor_degree();
  report.predicted_ratio = c.ratio();
  if (m_lo > m_hi) return report;

  Int span = m_hi - m_lo + 1;
  if (!span.fits_slong_p()) throw BadParameters("sample range too large");
  long count = span.get_si();
  report.rows.resize(count);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
#endif
  for (long i = 0; i < count; ++i) report.rows[i] = make_row(c, m_lo + i);
  (void)parallel;

  for (const auto& row : report.rows)
    if (row.theta_emp > report.max_theta) report.max_theta = row.theta_emp;
  return report;
}

}  // namespace

SmoothnessReport smoothness_sample(const Certificate& c, const Int& m_lo, const Int& m_hi) {
  return run_sample(c, m_lo, m_hi, true);
}

SmoothnessReport smoothness_sample_serial(const Certificate& c, const Int& m_lo,
                                          const Int& m_hi) {
  return run_sample(c, m_lo, m_hi, false);
}

WitnessReport smooth_witnesses(const IntPoly& f, const Rat& eps, unsigned count,
                               const WitnessOptions& opts) {
  if (f.degree() != 2) throw BadParameters("smooth_witnesses handles quadratic f");
  if (eps <= 0) throw BadParameters("eps must be positive");

  double target = eps.get_d() * (1.0 - opts.slack);
  Certificate cert;
  bool have = false;
  std::string attempts;
  for (std::uint64_t X = opts.initial_X; X <= opts.max_X; X = X + X / 2 + 1) {
    Certificate c = polysmooth_quadratic(f, X, opts.quad);
    attempts += (attempts.empty() ? "" : ", ") + std::to_string(X) + " -> ratio " +
                c.ratio().get_str();
    if (c.ratio().get_d() < target) {
      cert = std::move(c);
      have = true;
      break;
    }
  }
  if (!have)
    throw CertificateTooCoarse("no certificate ratio below " + std::to_string(target) +
                               " within the prime-bound schedule (tried X: " + attempts + ")");
  if (!verify_certificate(cert, VerifyMode::Probabilistic).pass)
    throw IdentityFails("witness certificate failed verification");

  WitnessReport report;
  report.eps = eps;
  unsigned long q = eps.get_den().get_ui();
  unsigned long p = eps.get_num().get_ui();

  for (Int m = 1; m <= Int(static_cast<unsigned long>(opts.max_m)) &&
                  report.witnesses.size() < count;
       ++m) {
    Rat gm = cert.g.evaluate(Rat(m));
    if (gm.get_den() != 1) continue;
    Int n = gm.get_num();
    if (abs(n) < 2) continue;
    std::vector<Rat> values;
    for (const auto& fe : cert.factors) values.push_back(fe.evaluate(Rat(m)));
    PrimeFactorization fac = merged_support(cert.scalar, values);
    Int lpf = fac.largest_prime();
    // LPF(f(n)) <= |n|^eps  <=>  lpf^q <= |n|^p for eps = p/q
    Int lhs, rhs, na = abs(n);
    mpz_pow_ui(lhs.get_mpz_t(), lpf.get_mpz_t(), q);
    mpz_pow_ui(rhs.get_mpz_t(), na.get_mpz_t(), p);
    if (lhs > rhs) continue;
    SmoothWitness w;
    w.m = m;
    w.n = n;
    w.value = fac.value();
    w.factorization = std::move(fac);
    w.lpf = lpf;
    report.witnesses.push_back(std::move(w));
  }
  report.certificate = std::move(cert);
  return report;
}

nlohmann::ordered_json smoothness_report_json(const Certificate& c,
                                              const SmoothnessReport& report) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["f"] = c.f.str();
  doc["g"] = c.g.str();
  doc["method"] = c.method;
  doc["total_degree"] = report.total_degree;
  doc["max_factor_degree"] = report.max_factor_degree;
  doc["predicted_ratio"] = report.predicted_ratio.get_str();
  doc["max_theta_emp"] = report.max_theta;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json j;
    j["m"] = row.m.get_str();
    j["N"] = row.N.get_str();
    j["lpf"] = row.lpf.get_str();
    j["theta_emp"] = row.theta_emp;
    j["identity_ok"] = row.identity_ok;
    nlohmann::ordered_json vals = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < row.factor_values.size(); ++i)
      vals.push_back({{"value", row.factor_values[i].get_str()},
                      {"lpf", row.factor_lpf[i].get_str()}});
    j["factors"] = std::move(vals);
    doc["rows"].push_back(std::move(j));
  }
  return doc;
}

std::string smoothness_report_table(const SmoothnessReport& report) {
  std::size_t wm = 1, wn = 1, wl = 3;
  for (const auto& r : report.rows) {
    wm = std::max(wm, r.m.get_str().size());
    wn = std::max(wn, r.N.get_str().size());
    wl = std::max(wl, r.lpf.get_str().size());
  }
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(wm)) << "m" << "  "
      << std::setw(static_cast<int>(wn)) << "N" << "  " << std::setw(static_cast<int>(wl))
      << "lpf" << "  theta_emp\n";
  for (const auto& r : report.rows) {
    out << std::left << std::setw(static_cast<int>(wm)) << r.m.get_str() << "  "
        << std::setw(static_cast<int>(wn)) << r.N.get_str() << "  "
        << std::setw(static_cast<int>(wl)) << r.lpf.get_str() << "  " << std::fixed
        << std::setprecision(6) << r.theta_emp << "\n";
  }
  out << "max theta_emp " << std::fixed << std::setprecision(6) << report.max_theta
      << ", predicted ratio " << report.predicted_ratio.get_str() << "\n";
  return out.str();
}

std::string smoothness_report_csv(const SmoothnessReport& report) {
  std::ostringstream out;
  out << "m,N,lpf,theta_emp,identity_ok\n";
  for (const auto& r : report.rows)
    out << r.m.get_str() << "," << r.N.get_str() << "," << r.lpf.get_str() << ","
        << std::setprecision(17) << r.theta_emp << "," << (r.identity_ok ? 1 : 0) << "\n";
  return out.str();
}

}  // namespace polysmooth
