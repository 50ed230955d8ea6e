// Compares the OpenMP quadratic-substitution scan and smoothness sampler
// against their single-threaded reference implementations and checks that
// the outputs agree.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "polysmooth/constructions.hpp"
#include "polysmooth/obstruction.hpp"
#include "polysmooth/parse.hpp"
#include "polysmooth/smoothness.hpp"

using namespace polysmooth;

int main(int argc, char** argv) {
  std::string f_text = "t^4+t^2+2*t+3";
  unsigned H = 30;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "-f")
      f_text = argv[i + 1];
    else if (flag == "--height")
      H = static_cast<unsigned>(std::strtoul(argv[i + 1], nullptr, 10));
    else {
      std::fprintf(stderr, "usage: bench_scan [-f poly] [--height H]\n");
      return 2;
    }
  }
  IntPoly f = parse_poly(f_text).num();

  auto par = quadratic_substitution_scan(f, H);
  auto ser = quadratic_substitution_scan_serial(f, H);
  bool scan_ok = par.hits.size() == ser.hits.size() &&
                 par.stats.candidates == ser.stats.candidates &&
                 par.stats.filtered == ser.stats.filtered &&
                 par.stats.factored == ser.stats.factored;
  std::printf("scan %-18s H=%-4u  parallel %8.3fs  serial %8.3fs  speedup %.2fx  %s\n",
              f_text.c_str(), H, par.stats.wall_seconds, ser.stats.wall_seconds,
              par.stats.wall_seconds > 0 ? ser.stats.wall_seconds / par.stats.wall_seconds
                                         : 0.0,
              scan_ok ? "outputs agree" : "OUTPUT MISMATCH");

  auto [seed, cert] = quadratic_construct(IntPoly{1, 0, 1}, 5);
  auto t0 = std::chrono::steady_clock::now();
  auto sp = smoothness_sample(cert, 10000, 10100);
  auto t1 = std::chrono::steady_clock::now();
  auto ss = smoothness_sample_serial(cert, 10000, 10100);
  auto t2 = std::chrono::steady_clock::now();
  bool sample_ok = sp.rows.size() == ss.rows.size() && sp.max_theta == ss.max_theta;
  for (std::size_t i = 0; sample_ok && i < sp.rows.size(); ++i)
    sample_ok = sp.rows[i].N == ss.rows[i].N && sp.rows[i].lpf == ss.rows[i].lpf;
  double dp = std::chrono::duration<double>(t1 - t0).count();
  double ds = std::chrono::duration<double>(t2 - t1).count();
  std::printf("sample t^2+1 k=3 m=10000..10100  parallel %8.3fs  serial %8.3fs  speedup "
              "%.2fx  %s\n",
              dp, ds, dp > 0 ? ds / dp : 0.0, sample_ok ? "outputs agree" : "OUTPUT MISMATCH");
  return scan_ok && sample_ok ? 0 : 1;
}
